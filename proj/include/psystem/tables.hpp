#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace psystem {

struct TableSpec {
  std::vector<double> betas{0.25, 0.5, 2.0, 5.0};
  std::vector<double> v0_tildes{0.1, 0.25, 0.5, 2.0, 4.0, 10.0, 40.0};
  std::vector<double> fs{0.25, 0.5};
};

struct TableCell {
  std::optional<double> gamma_l;
  std::string error;
};

/// One row per (beta, v0_tilde): Ogden, Modified Kirchhoff, then Blatz-Ko
/// for every f, each with mu = rho0 = 1, lambda = 2 beta, v0 = sqrt(v0_tilde).
struct TableRow {
  double beta;
  double v0_tilde;
  std::vector<TableCell> cells;
};

std::vector<TableRow> compute_tables(const TableSpec& spec = {});

/// "ogden", "m_kirchhoff", "blatzko_f025", ...
std::vector<std::string> table_columns(const TableSpec& spec);

/// Decimal places per column: 4 for Ogden and 6 otherwise, unless
/// `digits` overrides all of them.
void write_tables_csv(std::ostream& os, const TableSpec& spec, const std::vector<TableRow>& rows,
                      std::optional<int> digits = {});

} // namespace psystem
