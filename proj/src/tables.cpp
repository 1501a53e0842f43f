#include "psystem/tables.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "psystem/constitutive.hpp"
#include "psystem/error.hpp"
#include "psystem/shock.hpp"

namespace psystem {

namespace {

TableCell solve_cell(const ModelSpec& model, double v0_tilde) {
  try {
    return {solve_rankine_hugoniot(model, std::sqrt(v0_tilde)).gamma_l, {}};
  } catch (const Error& e) {
    return {std::nullopt, e.what()};
  }
}

// 0.25 -> "025", 0.5 -> "05"
std::string f_suffix(double f) {
  std::string s = fmt::format("{:g}", f);
  std::erase(s, '.');
  return s;
}

} // namespace

std::vector<TableRow> compute_tables(const TableSpec& spec) {
  std::vector<TableRow> rows;
  for (double beta : spec.betas) {
    for (double vt : spec.v0_tildes) {
      TableRow row{beta, vt, {}};
      row.cells.push_back(solve_cell(ModelSpec::from_beta(ModelKind::Ogden, beta), vt));
      row.cells.push_back(solve_cell(ModelSpec::from_beta(ModelKind::KirchhoffModified, beta), vt));
      for (double f : spec.fs) {
        row.cells.push_back(solve_cell(ModelSpec::from_beta(ModelKind::BlatzKoOgden, beta, f), vt));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<std::string> table_columns(const TableSpec& spec) {
  std::vector<std::string> cols{"ogden", "m_kirchhoff"};
  for (double f : spec.fs) cols.push_back("blatzko_f" + f_suffix(f));
  return cols;
}

void write_tables_csv(std::ostream& os, const TableSpec& spec, const std::vector<TableRow>& rows,
                      std::optional<int> digits) {
  os << "beta,v0_tilde";
  for (const auto& c : table_columns(spec)) os << ',' << c;
  os << '\n';
  for (const auto& row : rows) {
    os << fmt::format("{:g},{:g}", row.beta, row.v0_tilde);
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      os << ',';
      if (row.cells[i].gamma_l) {
        const int d = digits.value_or(i == 0 ? 4 : 6);
        os << fmt::format("{:.{}f}", *row.cells[i].gamma_l, d);
      }
    }
    os << '\n';
  }
}

} // namespace psystem
