#include "grouplet/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "grouplet/maschke.hpp"
#include "grouplet/report.hpp"
#include "grouplet/selftest.hpp"

namespace grouplet {

namespace {

void require_group_and_field(const RunConfig& cfg) {
  if (cfg.group_spec.empty()) throw ValidationError("missing --group");
  if (cfg.field_spec.empty()) throw ValidationError("missing --field");
}

void require_files_exist(const RunConfig& cfg) {
  if (!cfg.group_spec.empty() && cfg.group_spec.front() == '@') {
    std::string path = cfg.group_spec.substr(1);
    if (!std::filesystem::exists(path)) {
      throw ValidationError("group file '" + path + "' does not exist");
    }
  }
  if (cfg.command == RunConfig::Command::Extract) {
    if (cfg.matrix_path.empty()) throw ValidationError("extract requires --matrix <path>");
    if (!std::filesystem::exists(cfg.matrix_path)) {
      throw ValidationError("matrix file '" + cfg.matrix_path + "' does not exist");
    }
  }
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file '" + cfg.out_path + "'");
  file << text;
}

int run_check(const RunConfig& cfg, std::ostream& out) {
  require_group_and_field(cfg);
  FiniteGroup group = parse_group_spec(cfg.group_spec);
  FieldSpec spec = FieldSpec::parse(cfg.field_spec);
  MaschkeVerdict v = verdict(group, spec);
  emit(cfg, out,
       cfg.format == RunConfig::Format::Json ? verdict_to_json_text(v) : verdict_to_text(v));
  return 0;
}

int run_radical(const RunConfig& cfg, std::ostream& out) {
  require_group_and_field(cfg);
  FiniteGroup group = parse_group_spec(cfg.group_spec);
  FieldSpec spec = FieldSpec::parse(cfg.field_spec);

  bool modular = char_divides(spec, static_cast<std::uint64_t>(group.order()));
  bool exact = true;
  RadicalBasis basis = [&]() {
    if (!modular) return radical_nonmodular(group, spec);
    if (radical_oracle_feasible(group, spec)) return radical_oracle(group, spec);
    exact = false;  // witness ideal is a lower bound only
    return modular_witness(group, spec);
  }();
  std::vector<int> indices;
  for (const GroupRingElement& e : basis.elements()) {
    indices.push_back(*is_nilpotent(embed(e)).index);
  }
  emit(cfg, out,
       cfg.format == RunConfig::Format::Json ? radical_report_json_text(basis, indices, exact)
                                             : radical_report_text(basis, indices, exact));
  return 0;
}

int run_embed(const RunConfig& cfg, std::ostream& out) {
  require_group_and_field(cfg);
  if (cfg.element_literal.empty()) throw ValidationError("embed requires --element <coeffs>");
  FiniteGroup group = parse_group_spec(cfg.group_spec);
  FieldSpec spec = FieldSpec::parse(cfg.field_spec);
  GroupRingElement x = GroupRingElement::parse(group, spec, cfg.element_literal);
  ExactMatrix m = embed(x);
  emit(cfg, out,
       cfg.format == RunConfig::Format::Json ? matrix_to_json_text(m) : matrix_to_text(m));
  return 0;
}

int run_extract(const RunConfig& cfg, std::ostream& out) {
  require_group_and_field(cfg);
  FiniteGroup group = parse_group_spec(cfg.group_spec);
  FieldSpec spec = FieldSpec::parse(cfg.field_spec);
  ExactMatrix m = read_matrix_file(cfg.matrix_path, spec);
  GroupRingElement x = extract(m, group);
  if (cfg.format == RunConfig::Format::Json) {
    emit(cfg, out, element_to_json_text(x));
  } else {
    emit(cfg, out, "element:       " + element_coeff_literal(x) + "\n" +
                       "display:       " + x.to_string() + "\n");
  }
  return 0;
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
  std::vector<FiniteGroup> groups = catalog_groups(12);
  std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime_field(2),
                                   FieldSpec::prime_field(3), FieldSpec::prime_field(5),
                                   FieldSpec::prime_field(7)};
  std::vector<MaschkeVerdict> cells;
  for (const FiniteGroup& g : groups) {
    for (const FieldSpec& spec : fields) {
      cells.push_back(verdict(g, spec));
    }
  }
  emit(cfg, out,
       cfg.format == RunConfig::Format::Json ? sweep_to_json_text(cells, cfg.seed)
                                             : sweep_to_text(cells));
  return 0;
}

int run_selftest_command(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream buffer;
  SelftestSummary summary = run_selftest(cfg.seed, buffer);
  emit(cfg, out, buffer.str());
  return summary.failed == 0 ? 0 : 2;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    require_files_exist(cfg);
    switch (cfg.command) {
      case RunConfig::Command::Check: return run_check(cfg, out);
      case RunConfig::Command::Radical: return run_radical(cfg, out);
      case RunConfig::Command::Embed: return run_embed(cfg, out);
      case RunConfig::Command::Extract: return run_extract(cfg, out);
      case RunConfig::Command::Sweep: return run_sweep(cfg, out);
      case RunConfig::Command::Selftest: return run_selftest_command(cfg, out);
    }
    throw ValidationError("unknown command");
  } catch (const CertificateViolation& e) {
    err << "certificate violation (internal bug): " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace grouplet
