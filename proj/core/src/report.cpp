#include "grouplet/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace grouplet {

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson scalar_row(const std::vector<Scalar>& row) {
  OrderedJson out = OrderedJson::array();
  for (const Scalar& c : row) out.push_back(c.to_string());
  return out;
}

OrderedJson basis_json(const RadicalBasis& basis) {
  OrderedJson rows = OrderedJson::array();
  for (const GroupRingElement& e : basis.elements()) rows.push_back(scalar_row(e.coeffs()));
  return rows;
}

OrderedJson radical_dimension_json(const MaschkeVerdict& v) {
  if (v.exact_radical_dimension.has_value()) return *v.exact_radical_dimension;
  return OrderedJson{{"at_least", v.radical_dimension_lower_bound}};
}

OrderedJson verdict_json(const MaschkeVerdict& v) {
  const FiniteGroup& group = v.group;
  OrderedJson doc;
  doc["group"] = group.label();
  doc["field"] = v.spec.to_string();
  doc["order"] = group.order();
  doc["characteristic"] = v.spec.characteristic();
  doc["outcome"] =
      v.outcome == MaschkeVerdict::Outcome::Semisimple ? "semisimple" : "non_semisimple";
  doc["radical_dimension"] = radical_dimension_json(v);

  OrderedJson cert;
  if (v.outcome == MaschkeVerdict::Outcome::Semisimple) {
    const SemisimpleCertificate& c = *v.semisimple;
    cert["method"] = "gram_kernel";
    cert["char_divides_order"] = false;
    cert["gram_determinant"] = c.gram_det.to_string();
    cert["expected_determinant"] = c.expected_det.to_string();
    cert["inversion_sign"] = c.inversion_sign;
    cert["oracle_checked"] = c.oracle_checked;
  } else {
    const NonSemisimpleCertificate& c = *v.non_semisimple;
    cert["method"] = "witness_ideal_closure";
    cert["char_divides_order"] = true;
    cert["sigma"] = scalar_row(c.sigma.coeffs());
    cert["sigma_squared_is_zero"] = true;
    cert["witness_basis"] = basis_json(c.witness);
    cert["nilpotency_indices"] = c.nilpotency_indices;
    cert["oracle_checked"] = c.oracle_dimension.has_value();
    if (c.oracle_dimension.has_value()) cert["oracle_dimension"] = *c.oracle_dimension;
  }
  doc["certificate"] = std::move(cert);
  return doc;
}

std::string dimension_display(const MaschkeVerdict& v) {
  if (v.exact_radical_dimension.has_value()) return std::to_string(*v.exact_radical_dimension);
  return ">=" + std::to_string(v.radical_dimension_lower_bound);
}

std::vector<Scalar> parse_scalar_row(const OrderedJson& row, const FieldSpec& spec,
                                     const std::string& what) {
  if (!row.is_array()) throw ValidationError(what + " must be an array of element strings");
  std::vector<Scalar> out;
  for (const auto& cell : row) {
    if (!cell.is_string()) throw ValidationError(what + " entries must be strings");
    out.push_back(Scalar::parse(spec, cell.get<std::string>()));
  }
  return out;
}

OrderedJson parse_json(const std::string& text, const std::string& what) {
  try {
    return OrderedJson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(what + " is not valid JSON: " + e.what());
  }
}

}  // namespace

std::string matrix_to_json_text(const ExactMatrix& m) {
  OrderedJson rows = OrderedJson::array();
  for (int i = 0; i < m.rows(); ++i) {
    OrderedJson row = OrderedJson::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows.dump() + "\n";
}

ExactMatrix matrix_from_json_text(const std::string& text, const FieldSpec& spec) {
  OrderedJson doc = parse_json(text, "matrix");
  if (!doc.is_array() || doc.empty()) {
    throw ValidationError("matrix JSON must be a non-empty array of rows");
  }
  std::vector<Scalar> entries;
  int rows = static_cast<int>(doc.size());
  int cols = -1;
  for (const auto& row : doc) {
    std::vector<Scalar> r = parse_scalar_row(row, spec, "matrix row");
    if (cols < 0) cols = static_cast<int>(r.size());
    if (static_cast<int>(r.size()) != cols) {
      throw ValidationError("matrix JSON rows have inconsistent lengths");
    }
    entries.insert(entries.end(), r.begin(), r.end());
  }
  if (cols < 1) throw ValidationError("matrix JSON rows must be non-empty");
  return ExactMatrix(spec, rows, cols, std::move(entries));
}

ExactMatrix read_matrix_file(const std::string& path, const FieldSpec& spec) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open matrix file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return matrix_from_json_text(buf.str(), spec);
}

std::string matrix_to_text(const ExactMatrix& m) {
  std::size_t width = 1;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) width = std::max(width, m.at(i, j).to_string().size());
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      out << (j ? " " : "") << std::setw(static_cast<int>(width)) << m.at(i, j).to_string();
    }
    out << "\n";
  }
  return out.str();
}

std::string verdict_to_json_text(const MaschkeVerdict& v) { return verdict_json(v).dump(2) + "\n"; }

std::string verdict_to_text(const MaschkeVerdict& v) {
  const FiniteGroup& group = v.group;
  std::ostringstream out;
  out << "group:         " << group.label() << " (order " << group.order() << ")\n";
  out << "field:         " << v.spec.to_string() << " (characteristic "
      << v.spec.characteristic() << ")\n";
  bool modular = v.outcome == MaschkeVerdict::Outcome::NonSemisimple;
  out << "char | order:  " << (modular ? "yes" : "no") << "\n";
  out << "outcome:       " << (modular ? "non_semisimple" : "semisimple") << "\n";
  out << "radical dim:   " << dimension_display(v);
  if (!v.exact_radical_dimension.has_value()) out << " (witness lower bound)";
  out << "\n";
  if (!modular) {
    const SemisimpleCertificate& c = *v.semisimple;
    out << "gram det:      " << c.gram_det.to_string() << " (expected "
        << c.expected_det.to_string() << " = " << (c.inversion_sign < 0 ? "-" : "+") << ""
        << group.order() << "^" << group.order() << ")\n";
    out << "oracle:        " << (c.oracle_checked ? "checked, agrees" : "not run (out of bounds)")
        << "\n";
  } else {
    const NonSemisimpleCertificate& c = *v.non_semisimple;
    out << "witness sigma: " << c.sigma.to_string() << "\n";
    out << "witness basis: dimension " << c.witness.dimension() << ", nilpotency indices [";
    for (std::size_t i = 0; i < c.nilpotency_indices.size(); ++i) {
      if (i) out << ", ";
      out << c.nilpotency_indices[i];
    }
    out << "]\n";
    out << "oracle:        ";
    if (c.oracle_dimension.has_value()) {
      out << "radical dimension " << *c.oracle_dimension << " (exact)";
    } else {
      out << "not run (out of bounds)";
    }
    out << "\n";
  }
  return out.str();
}

void recheck_verdict_json_text(const std::string& text, const FiniteGroup& group) {
  OrderedJson doc = parse_json(text, "verdict report");
  for (const char* key :
       {"group", "field", "order", "characteristic", "outcome", "radical_dimension",
        "certificate"}) {
    if (!doc.contains(key)) {
      throw ValidationError("verdict report is missing the '" + std::string(key) + "' field");
    }
  }
  FieldSpec spec = FieldSpec::parse(doc["field"].get<std::string>());
  int n = group.order();
  auto fail = [&](const std::string& why) {
    throw CertificateViolation("verdict recheck failed for " + spec.to_string() + "[" +
                               group.label() + "]: " + why);
  };

  if (doc["group"].get<std::string>() != group.label()) fail("group label mismatch");
  if (doc["order"].get<int>() != n) fail("order mismatch");
  if (doc["characteristic"].get<std::uint64_t>() != spec.characteristic()) {
    fail("characteristic mismatch");
  }
  bool modular = char_divides(spec, static_cast<std::uint64_t>(n));
  std::string outcome = doc["outcome"].get<std::string>();
  if (outcome != (modular ? "non_semisimple" : "semisimple")) {
    fail("outcome contradicts the characteristic test");
  }

  const OrderedJson& cert = doc["certificate"];
  if (!modular) {
    if (cert["method"].get<std::string>() != "gram_kernel") fail("unexpected method");
    if (!doc["radical_dimension"].is_number_integer() ||
        doc["radical_dimension"].get<int>() != 0) {
      fail("semisimple verdict must state radical dimension 0");
    }
    Scalar stated_det = Scalar::parse(spec, cert["gram_determinant"].get<std::string>());
    Scalar stated_expected = Scalar::parse(spec, cert["expected_determinant"].get<std::string>());
    GramMatrix gram = gram_matrix(group, spec);
    if (determinant(gram.matrix) != stated_det) fail("gram determinant does not recompute");
    int sign = inversion_sign(group);
    if (cert["inversion_sign"].get<int>() != sign) fail("inversion sign does not recompute");
    Scalar expected = Scalar::one(spec);
    for (int i = 0; i < n; ++i) expected *= Scalar::from_integer(spec, n);
    if (sign < 0) expected = -expected;
    if (expected != stated_expected) fail("expected determinant does not recompute");
    if (stated_det != stated_expected) fail("stated determinant differs from +-n^n");
    if (radical_nonmodular(group, spec).dimension() != 0) fail("gram kernel is nonzero");
    return;
  }

  if (cert["method"].get<std::string>() != "witness_ideal_closure") fail("unexpected method");
  GroupRingElement sigma(group, spec, parse_scalar_row(cert["sigma"], spec, "sigma"));
  if (sigma != GroupRingElement::sigma(group, spec)) fail("sigma is not the sum of all elements");
  if (!(sigma * sigma).is_zero()) fail("sigma^2 != 0");

  std::vector<GroupRingElement> witness_elements;
  for (const auto& row : cert["witness_basis"]) {
    witness_elements.emplace_back(group, spec, parse_scalar_row(row, spec, "witness basis row"));
  }
  // Re-runs the ideal-closure and nilpotency invariants.
  RadicalBasis witness = RadicalBasis::checked(group, spec, witness_elements,
                                               RadicalMethod::WitnessIdealClosure);
  if (witness.dimension() != static_cast<int>(cert["witness_basis"].size())) {
    fail("witness basis is not in reduced form");
  }
  if (!witness.contains(sigma)) fail("sigma is not in the witness span");

  std::vector<int> stated_indices = cert["nilpotency_indices"].get<std::vector<int>>();
  if (stated_indices.size() != witness_elements.size()) fail("nilpotency index count mismatch");
  for (std::size_t i = 0; i < witness_elements.size(); ++i) {
    NilpotencyResult nil = is_nilpotent(embed(witness.elements()[i]));
    if (!nil.nilpotent || *nil.index != stated_indices[i]) {
      fail("nilpotency index does not recompute");
    }
  }

  if (cert["oracle_checked"].get<bool>()) {
    if (!doc["radical_dimension"].is_number_integer()) {
      fail("oracle-backed verdict must state an exact radical dimension");
    }
    int dim = doc["radical_dimension"].get<int>();
    if (cert["oracle_dimension"].get<int>() != dim) fail("oracle dimension mismatch");
    if (dim < witness.dimension()) fail("radical dimension below the witness dimension");
  } else {
    if (!doc["radical_dimension"].is_object() ||
        doc["radical_dimension"]["at_least"].get<int>() != witness.dimension()) {
      fail("lower bound must equal the witness dimension");
    }
  }
}

std::string radical_report_json_text(const RadicalBasis& basis,
                                     const std::vector<int>& nilpotency_indices, bool exact) {
  OrderedJson doc;
  doc["group"] = basis.group().label();
  doc["field"] = basis.spec().to_string();
  doc["order"] = basis.group().order();
  doc["method"] = method_name(basis.method());
  doc["dimension"] = basis.dimension();
  doc["exact"] = exact;
  doc["basis"] = basis_json(basis);
  doc["nilpotency_indices"] = nilpotency_indices;
  return doc.dump(2) + "\n";
}

std::string radical_report_text(const RadicalBasis& basis,
                                const std::vector<int>& nilpotency_indices, bool exact) {
  std::ostringstream out;
  out << "group:        " << basis.group().label() << " (order " << basis.group().order()
      << ")\n";
  out << "field:        " << basis.spec().to_string() << "\n";
  out << "method:       " << method_name(basis.method()) << "\n";
  out << "radical dim:  " << (exact ? "" : ">=") << basis.dimension() << "\n";
  for (int i = 0; i < basis.dimension(); ++i) {
    out << "  basis[" << i + 1 << "]:   " << basis.elements()[static_cast<std::size_t>(i)].to_string()
        << "  (nilpotency index " << nilpotency_indices[static_cast<std::size_t>(i)] << ")\n";
  }
  if (basis.dimension() == 0) out << "  (trivial radical)\n";
  return out.str();
}

std::string element_to_json_text(const GroupRingElement& x) {
  OrderedJson doc;
  doc["group"] = x.group().label();
  doc["field"] = x.spec().to_string();
  doc["coefficients"] = scalar_row(x.coeffs());
  doc["display"] = x.to_string();
  return doc.dump(2) + "\n";
}

std::string element_coeff_literal(const GroupRingElement& x) {
  std::ostringstream out;
  for (int i = 0; i < x.size(); ++i) {
    if (i) out << ",";
    out << x.coeff(i).to_string();
  }
  return out.str();
}

std::string sweep_to_json_text(const std::vector<MaschkeVerdict>& cells, std::uint64_t seed) {
  OrderedJson doc;
  doc["seed"] = seed;
  OrderedJson arr = OrderedJson::array();
  for (const MaschkeVerdict& v : cells) arr.push_back(verdict_json(v));
  doc["cells"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::string sweep_to_text(const std::vector<MaschkeVerdict>& cells) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "group" << std::setw(7) << "order" << std::setw(7)
      << "field" << std::setw(6) << "char" << std::setw(16) << "outcome" << "radical dim\n";
  out << std::string(58, '-') << "\n";
  for (const MaschkeVerdict& v : cells) {
    bool modular = v.outcome == MaschkeVerdict::Outcome::NonSemisimple;
    out << std::left << std::setw(12) << v.group.label() << std::setw(7) << v.group.order()
        << std::setw(7) << v.spec.to_string() << std::setw(6) << v.spec.characteristic()
        << std::setw(16) << (modular ? "non_semisimple" : "semisimple") << dimension_display(v)
        << "\n";
  }
  return out.str();
}

}  // namespace grouplet
