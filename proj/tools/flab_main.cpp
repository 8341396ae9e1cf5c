#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flab/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw flab::DomainError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

flab::Semantics semantics_from_string(const std::string& name) {
  for (flab::Semantics s : flab::all_semantics())
    if (name == flab::to_string(s)) return s;
  throw flab::DomainError("unknown semantics '" + name + "'");
}

flab::Postulate postulate_from_string(const std::string& name) {
  for (flab::Postulate p : flab::all_postulates())
    if (name == flab::to_string(p)) return p;
  throw flab::DomainError("unknown postulate '" + name + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string pad(const std::string& text, std::size_t width) {
  std::string out = text;
  while (out.size() < width) out += ' ';
  return out;
}

void print_labeling_set_pretty(flab::Semantics semantics,
                               const flab::LabelingSet& set) {
  std::cout << "semantics: " << flab::to_string(semantics) << "  ("
            << flab::solve_domain(semantics) << ")\n";
  std::cout << "labelings: " << set.labelings.size() << "\n";
  std::size_t index = 0;
  for (const auto& lab : set.labelings) {
    std::cout << "  #" << ++index << "\n";
    std::cout << "    " << pad("argument", 12) << pad("a", 8) << pad("r", 8)
              << "u\n";
    for (const auto& [name, triple] : lab.triples())
      std::cout << "    " << pad(name, 12) << pad(render_degree(triple.a), 8)
                << pad(render_degree(triple.r), 8) << render_degree(triple.u)
                << "\n";
  }
}

void print_check_pretty(const std::map<flab::Postulate, flab::PostulateReport>& reports) {
  for (const auto& [p, report] : reports) {
    std::cout << pad(flab::to_string(p), 5)
              << (report.satisfied ? "satisfied" : "violated") << "\n";
    for (const auto& w : report.witnesses)
      std::cout << "      at " << w.argument << ": " << flab::render_rat(w.lhs)
                << " vs " << flab::render_rat(w.rhs) << "\n";
  }
}

void print_sweep_pretty(const flab::SweepResult& sweep) {
  std::cout << pad("", 15);
  for (flab::Principle p : flab::all_principles())
    std::cout << pad(flab::to_string(p), 5);
  std::cout << "\n";
  for (flab::Semantics s : flab::all_semantics()) {
    std::cout << pad(flab::to_string(s), 15);
    for (flab::Principle p : flab::all_principles()) {
      const auto& cell = sweep.cell(s, p);
      std::cout << pad(cell.outcome == flab::PrincipleOutcome::Violated ? "x" : ".", 5);
    }
    std::cout << "\n";
  }
  std::cout << "x = violated (witness recorded), . = no violation found\n";
}

struct Options {
  std::string command;
  std::string convert_mode;
  std::string fas_path;
  std::string labeling_path;
  std::string extension_path;
  std::string input_path;
  std::string semantics;
  std::string postulates;
  bool pretty = false;
  std::size_t max_enum = 10;
  std::uint64_t seed = 1;
  std::size_t count = 500;
  std::size_t max_args = 5;
};

int run_check(const Options& opt) {
  const flab::Fas fas = flab::parse_fas(read_file(opt.fas_path)).fas;
  const flab::FuzzyLabeling lab =
      flab::parse_labeling(read_file(opt.labeling_path)).labeling;
  const flab::EnumerationLimits limits{opt.max_enum};

  std::set<flab::Postulate> profile;
  std::optional<flab::Semantics> semantics;
  if (!opt.semantics.empty()) {
    semantics = semantics_from_string(opt.semantics);
    switch (*semantics) {
      case flab::Semantics::ConflictFree:
      case flab::Semantics::Admissible:
      case flab::Semantics::JvAdmissible:
      case flab::Semantics::VjAdmissible:
      case flab::Semantics::Complete:
        profile = flab::postulate_profile(*semantics);
        break;
      default:
        profile = flab::postulate_profile(flab::Semantics::Complete);
        break;
    }
  } else if (!opt.postulates.empty()) {
    for (const auto& name : split_list(opt.postulates))
      profile.insert(postulate_from_string(name));
  } else {
    profile.insert(flab::all_postulates().begin(), flab::all_postulates().end());
  }

  const auto reports = flab::check_profile(fas, lab, profile);
  bool findings = false;
  for (const auto& [p, report] : reports)
    if (!report.satisfied) findings = true;

  flab::Json doc = flab::check_report(reports);
  if (semantics) {
    const bool member = flab::is_labeling(fas, lab, *semantics, limits);
    doc["semantics"] = flab::to_string(*semantics);
    doc["member"] = member;
    if (!member) findings = true;
  }
  if (opt.pretty) {
    print_check_pretty(reports);
    if (semantics)
      std::cout << flab::to_string(*semantics) << " labeling: "
                << (doc["member"].get<bool>() ? "yes" : "no") << "\n";
  } else {
    std::cout << flab::render_json(doc);
  }
  return findings ? kExitFindings : kExitOk;
}

int run_solve(const Options& opt) {
  const flab::Fas fas = flab::parse_fas(read_file(opt.fas_path)).fas;
  const flab::Semantics semantics = semantics_from_string(opt.semantics);
  const flab::EnumerationLimits limits{opt.max_enum};
  const flab::LabelingSet set = flab::solve(fas, semantics, limits);
  if (opt.pretty)
    print_labeling_set_pretty(semantics, set);
  else
    std::cout << flab::render_json(flab::labeling_set_report(semantics, set));
  return kExitOk;
}

int run_convert(const Options& opt) {
  if (opt.convert_mode == "lab2ext") {
    const auto lab = flab::parse_labeling(read_file(opt.input_path)).labeling;
    std::cout << flab::render_extension(flab::flab_to_ext(lab));
  } else if (opt.convert_mode == "ext2lab") {
    if (opt.fas_path.empty())
      throw flab::DomainError("ext2lab needs a companion FAS (--fas <file>)");
    const auto fas = flab::parse_fas(read_file(opt.fas_path)).fas;
    const auto ext = flab::parse_extension(read_file(opt.input_path));
    std::cout << flab::render_labeling(flab::ext_to_flab(fas, ext));
  } else if (opt.convert_mode == "af2fas") {
    const auto af = flab::parse_af(read_file(opt.input_path));
    std::cout << flab::render_fas(flab::af_to_fas(af));
  } else if (opt.convert_mode == "clab2flab") {
    const auto clab = flab::parse_clab(read_file(opt.input_path));
    std::cout << flab::render_labeling(flab::clab_to_flab(clab));
  } else {
    throw flab::DomainError("unknown convert mode '" + opt.convert_mode +
                            "' (lab2ext, ext2lab, af2fas, clab2flab)");
  }
  return kExitOk;
}

int run_principles(const Options& opt) {
  flab::InstanceFamily family;
  family.seed = opt.seed;
  family.count = opt.count;
  family.max_args = opt.max_args;
  const flab::SweepResult sweep = flab::run_sweep(family);
  if (opt.pretty)
    print_sweep_pretty(sweep);
  else
    std::cout << flab::render_json(flab::sweep_report(sweep));
  return kExitOk;
}

int run_enumerate_values(const Options& opt) {
  const flab::Fas fas = flab::parse_fas(read_file(opt.fas_path)).fas;
  std::cout << flab::render_json(flab::values_report(flab::characteristic_values(fas)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) try {
  CLI::App app{"fuzzy labeling semantics solver"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("FLAB_MAX_ENUM"))
    opt.max_enum = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));

  auto* check = app.add_subcommand("check",
                                   "check a labeling against postulates or a semantics");
  check->add_option("fas", opt.fas_path, "FAS document")->required();
  check->add_option("labeling", opt.labeling_path, "labeling document")->required();
  auto* semantics_option =
      check->add_option("--semantics", opt.semantics, "semantics name");
  check->add_option("--postulates", opt.postulates, "comma-separated postulates")
      ->excludes(semantics_option);
  check->add_flag("--pretty", opt.pretty, "aligned table output");
  check->add_option("--max-enum", opt.max_enum, "enumeration cap (arguments)");

  auto* solve = app.add_subcommand("solve", "enumerate the labelings of a semantics");
  solve->add_option("fas", opt.fas_path, "FAS document")->required();
  solve->add_option("--semantics", opt.semantics, "semantics name")->required();
  solve->add_flag("--pretty", opt.pretty, "aligned table output");
  solve->add_option("--max-enum", opt.max_enum, "enumeration cap (arguments)");

  auto* convert = app.add_subcommand("convert", "convert between document formats");
  convert->add_option("mode", opt.convert_mode,
                      "lab2ext | ext2lab | af2fas | clab2flab")->required();
  convert->add_option("input", opt.input_path, "input document")->required();
  convert->add_option("--fas", opt.fas_path, "companion FAS (ext2lab)");

  auto* principles = app.add_subcommand("principles",
                                        "principle sweep over seeded random systems");
  principles->add_option("--seed", opt.seed, "family seed");
  principles->add_option("--count", opt.count, "number of instances");
  principles->add_option("--max-args", opt.max_args, "arguments per instance");
  principles->add_flag("--pretty", opt.pretty, "aligned table output");

  auto* values = app.add_subcommand("enumerate-values",
                                    "characteristic value set of a system");
  values->add_option("fas", opt.fas_path, "FAS document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(opt);
    if (solve->parsed()) return run_solve(opt);
    if (convert->parsed()) return run_convert(opt);
    if (principles->parsed()) return run_principles(opt);
    if (values->parsed()) return run_enumerate_values(opt);
  } catch (const flab::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const flab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const flab::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
} catch (const std::exception& e) {
  std::cerr << "internal error: " << e.what() << "\n";
  return kExitUsage;
} catch (...) {
  std::cerr << "internal error\n";
  return kExitUsage;
}
