#include "symrank/io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symrank {

namespace {

std::string form_text(const SignedLinearForm& form) {
  std::string out = "(";
  for (int i = 0; i < form.nvars; ++i) {
    const bool minus = form.sign(i) < 0;
    if (i == 0) {
      if (minus) out += "-";
    } else {
      out += minus ? " - " : " + ";
    }
    out += "x" + std::to_string(i + 1);
  }
  out += ")";
  return out;
}

const Json& require_field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(std::string("decomposition JSON: missing field '") +
                                key + "'");
  return *it;
}

int require_int(const Json& j, const char* key) {
  const Json& v = require_field(j, key);
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string("decomposition JSON: field '") + key +
                                "' must be an integer");
  return v.get<int>();
}

Integer require_decimal(const Json& j, const char* key) {
  const Json& v = require_field(j, key);
  if (!v.is_string())
    throw std::invalid_argument(std::string("decomposition JSON: field '") + key +
                                "' must be a decimal string");
  return integer_from_decimal(v.get<std::string>());
}

}  // namespace

Json to_json(const Decomposition& dec) {
  Json j;
  j["d"] = dec.degree;
  j["n"] = dec.nvars;
  j["scale"] = to_decimal(dec.scale);
  j["summands"] = Json::array();
  for (const auto& s : dec.summands) {
    Json js;
    js["weight"] = to_decimal(s.weight);
    Json minus = Json::array();
    for (int p : s.form.minus_vars) minus.push_back(p + 1);
    js["minus_set"] = std::move(minus);
    j["summands"].push_back(std::move(js));
  }
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("decomposition JSON: not an object");
  Decomposition dec;
  dec.degree = require_int(j, "d");
  dec.nvars = require_int(j, "n");
  dec.scale = require_decimal(j, "scale");
  const Json& summands = require_field(j, "summands");
  if (!summands.is_array())
    throw std::invalid_argument("decomposition JSON: 'summands' must be an array");
  for (const Json& js : summands) {
    Summand s;
    s.weight = require_decimal(js, "weight");
    const Json& minus = require_field(js, "minus_set");
    if (!minus.is_array())
      throw std::invalid_argument("decomposition JSON: 'minus_set' must be an array");
    s.form.nvars = dec.nvars;
    for (const Json& v : minus) {
      if (!v.is_number_integer())
        throw std::invalid_argument("decomposition JSON: minus_set entries must be integers");
      s.form.minus_vars.push_back(v.get<int>() - 1);
    }
    dec.summands.push_back(std::move(s));
  }
  return dec;
}

Json to_json(const VerificationReport& report) {
  Json j;
  j["verified"] = report.passed;
  j["d"] = report.degree;
  j["n"] = report.nvars;
  j["summand_count"] = report.summand_count;
  j["real_coefficients"] = report.real_coefficients;
  if (report.residual_monomial) {
    j["residual_monomial"] = report.residual_monomial->str();
    j["residual_coefficient"] = to_decimal(report.residual_coefficient);
  } else {
    j["residual_monomial"] = nullptr;
    j["residual_coefficient"] = nullptr;
  }
  return j;
}

Json to_json(const BoundsReport& report) {
  Json j;
  j["d"] = report.d;
  j["n"] = report.n;
  j["lower"] = to_decimal(report.lower);
  j["upper"] = to_decimal(report.upper);
  if (report.exact)
    j["exact"] = to_decimal(*report.exact);
  else
    j["exact"] = nullptr;
  j["real_rank_equal"] = report.real_rank_equal;
  j["notes"] = report.notes;
  return j;
}

Json to_json(const IdentityReport& report) {
  Json j;
  j["k"] = report.k;
  j["n"] = report.n;
  j["lhs"] = to_decimal(report.lhs);
  j["rhs"] = to_decimal(report.rhs);
  j["equal"] = report.equal;
  return j;
}

Json to_json(const SearchReport& report, bool include_certificates) {
  Json j;
  j["d"] = report.d;
  j["n"] = report.n;
  j["subset_size"] = report.subset_size;
  j["total_subsets"] = to_decimal(report.total_subsets);
  j["members"] = Json::array();
  for (const auto& m : report.members) j["members"].push_back(m);
  j["elapsed_ms"] = report.elapsed_ms;
  if (include_certificates) {
    Json table = Json::array();
    for (const auto& v : report.verdicts) {
      Json jv;
      jv["points"] = v.point_indices;
      jv["member"] = v.member;
      jv["rank_points"] = v.rank_points;
      jv["rank_augmented"] = v.rank_augmented;
      if (v.member) {
        Json coeffs = Json::array();
        for (const auto& c : v.coefficients) coeffs.push_back(to_decimal(c));
        jv["coefficients"] = std::move(coeffs);
      } else {
        jv["coefficients"] = nullptr;
      }
      table.push_back(std::move(jv));
    }
    j["subsets"] = std::move(table);
  }
  return j;
}

Json to_json(const Polynomial& p) {
  Json j;
  j["nvars"] = p.nvars();
  j["terms"] = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json jt;
    jt["monomial"] = m.str();
    jt["coefficient"] = to_decimal(c);
    j["terms"].push_back(std::move(jt));
  }
  return j;
}

Json matrix_to_json(const ExactMatrix& m, std::optional<int> rank) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json row_labels = Json::array(), col_labels = Json::array();
  for (const auto& l : m.row_labels()) row_labels.push_back(l.str());
  for (const auto& l : m.col_labels()) col_labels.push_back(l.str());
  j["row_labels"] = std::move(row_labels);
  j["col_labels"] = std::move(col_labels);
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_decimal(m.at(r, c)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  if (rank) j["rank"] = *rank;
  return j;
}

std::string to_text(const Decomposition& dec) {
  std::ostringstream out;
  out << to_decimal(dec.scale) << " * sigma(" << dec.degree << "," << dec.nvars
      << ") =\n";
  for (const auto& s : dec.summands) {
    const bool neg = s.weight < 0;
    const Integer mag = neg ? Integer(-s.weight) : s.weight;
    out << "  " << (neg ? "-" : "+") << " " << to_decimal(mag) << " * "
        << form_text(s.form) << "^" << dec.degree << "\n";
  }
  return out.str();
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  if (report.passed) {
    out << "verified: scale * sigma(" << report.degree << "," << report.nvars
        << ") equals the sum of " << report.summand_count
        << " signed powers (exact)\n";
  } else {
    out << "FAILED: residual coefficient "
        << to_decimal(report.residual_coefficient) << " at monomial "
        << report.residual_monomial->str() << " (" << report.summand_count
        << " summands checked)\n";
  }
  return out.str();
}

std::string to_text(const BoundsReport& report) {
  std::ostringstream out;
  if (report.exact) {
    out << "rank(sigma(" << report.d << "," << report.n
        << ")) = " << to_decimal(*report.exact);
  } else {
    out << to_decimal(report.lower) << " <= rank(sigma(" << report.d << ","
        << report.n << ")) <= " << to_decimal(report.upper);
  }
  out << "\n  " << report.notes << "\n";
  return out.str();
}

std::string to_text(const IdentityReport& report) {
  std::ostringstream out;
  out << "k=" << report.k << " n=" << report.n << ": lhs = " << to_decimal(report.lhs)
      << ", rhs = " << to_decimal(report.rhs) << " -> "
      << (report.equal ? "equal" : "NOT EQUAL") << "\n";
  return out.str();
}

std::string to_text(const SearchReport& report, bool include_certificates) {
  std::ostringstream out;
  out << report.members.size() << " of " << to_decimal(report.total_subsets)
      << " subsets of size " << report.subset_size
      << " admit membership of sigma(" << report.d << "," << report.n << ")\n";
  if (include_certificates) {
    for (const auto& v : report.verdicts) {
      out << "  {";
      for (std::size_t i = 0; i < v.point_indices.size(); ++i) {
        if (i) out << ",";
        out << v.point_indices[i];
      }
      out << "}: " << (v.member ? "member" : "not a member");
      if (v.member) {
        out << ", coefficients";
        for (const auto& c : v.coefficients) out << " " << to_decimal(c);
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string matrix_to_csv(const ExactMatrix& m) {
  std::ostringstream out;
  for (std::size_t c = 0; c < m.cols(); ++c) out << "," << m.col_labels()[c].str();
  out << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << m.row_labels()[r].str();
    for (std::size_t c = 0; c < m.cols(); ++c) out << "," << to_decimal(m.at(r, c));
    out << "\n";
  }
  return out.str();
}

std::string matrix_to_bitmap(const ExactMatrix& m) {
  if (!m.is_binary())
    throw std::domain_error("matrix_to_bitmap: matrix has entries other than 0/1");
  std::string out;
  out.reserve(m.rows() * (m.cols() + 1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out += (m.at(r, c) == 0 ? '0' : '1');
    out += '\n';
  }
  return out;
}

std::string matrix_pretty(const ExactMatrix& m) {
  std::vector<std::string> row_names(m.rows()), col_names(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    row_names[r] = m.row_labels()[r].index_label();
    if (m.row_is_zero(r)) row_names[r] += '*';
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    col_names[c] = m.col_labels()[c].index_label();
    if (m.col_is_zero(c)) col_names[c] += '*';
  }

  std::size_t label_width = 0;
  for (const auto& s : row_names) label_width = std::max(label_width, s.size());
  std::vector<std::size_t> widths(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    widths[c] = col_names[c].size();
    for (std::size_t r = 0; r < m.rows(); ++r)
      widths[c] = std::max(widths[c], to_decimal(m.at(r, c)).size());
  }

  std::ostringstream out;
  out << std::string(label_width, ' ');
  for (std::size_t c = 0; c < m.cols(); ++c) {
    out << ' ' << std::string(widths[c] - col_names[c].size(), ' ') << col_names[c];
  }
  out << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << std::string(label_width - row_names[r].size(), ' ') << row_names[r];
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string v = to_decimal(m.at(r, c));
      out << ' ' << std::string(widths[c] - v.size(), ' ') << v;
    }
    out << "\n";
  }
  if (!m.rows() || !m.cols()) out << "(empty " << m.rows() << "x" << m.cols() << " matrix)\n";
  return out.str();
}

}  // namespace symrank
