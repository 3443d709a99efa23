#include "roseman/dga.hpp"
#include "roseman/diagram.hpp"
#include "roseman/invariants.hpp"
#include "roseman/moves.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace roseman;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

bool is_dump(const std::string& path) { return std::filesystem::path(path).extension() == ".dga"; }

std::vector<Variant> variants_for(const std::string& flag) {
  if (flag == "all") return Variant::all();
  try {
    return {Variant::parse(flag)};
  } catch (const std::exception&) {
    throw UsageError("bad variant '" + flag + "' (expected --, -+, +-, ++ or all)");
  }
}

Variant single_variant(const std::string& flag) {
  auto vs = variants_for(flag);
  if (vs.size() != 1) throw UsageError("this command needs a single variant");
  return vs.front();
}

Diagram load_diagram(const std::string& path) {
  if (!std::filesystem::exists(path) && path.find_first_of("/.") == std::string::npos) {
    try {
      return load_fixture(path);
    } catch (const std::invalid_argument&) {
    }
  }
  std::string text = read_file(path);
  try {
    return parse_diagram(text);
  } catch (const DiagramError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Dga load_dga(const std::string& path, Variant v) {
  if (is_dump(path)) {
    try {
      return parse_dga(read_file(path));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(path + ": " + e.what());
    }
  }
  return build_dga(load_diagram(path), v);
}

struct Output {
  std::string path;
  std::ostringstream text;
  void line(const std::string& s) {
    std::cout << s << "\n";
    text << s << "\n";
  }
  void flush() {
    if (!path.empty()) write_file(path, text.str());
  }
};

std::vector<std::uint32_t> parse_primes(const std::string& list) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (const std::exception&) {
      throw UsageError("bad prime list '" + list + "'");
    }
    if (!is_prime(out.back())) throw UsageError(item + " is not prime");
  }
  if (out.empty()) throw UsageError("empty prime list");
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential graded algebras of surface-knot diagrams"};
  app.require_subcommand(1);

  std::string input, input2, script, script2, variant = "--", out, primes = "2,3,5", relabel_spec;
  std::uint32_t p = 3;
  std::uint64_t budget = 0;
  bool strict = false, use_hr0 = false;
  std::optional<std::uint64_t> seed;

  auto* validate = app.add_subcommand("validate", "check a diagram's incidence rules");
  validate->add_option("input", input, ".skd diagram")->required();
  validate->add_option("--out", out, "write the report here");

  auto* build = app.add_subcommand("build", "build a DGA and print its dump");
  build->add_option("input", input, ".skd diagram")->required();
  build->add_option("--variant", variant, "--, -+, +- or ++");
  build->add_option("--out", out, "write the dump here instead of stdout");

  auto* check = app.add_subcommand("check-d2", "verify d(d(g)) = 0 for every generator");
  check->add_option("input", input, ".skd diagram or .dga dump")->required();
  check->add_option("--variant", variant, "--, -+, +-, ++ or all");
  check->add_option("--out", out, "write the report here");

  auto* run = app.add_subcommand("run-script", "replay a move script");
  run->add_option("input", input, ".skd diagram or .dga dump")->required();
  run->add_option("script", script, ".mvs move script")->required();
  run->add_option("--variant", variant, "--, -+, +- or ++");
  run->add_option("--out", out, "write the resulting dump here");
  run->add_flag("--strict", strict, "re-check d^2 = 0 after every cancellation");
  run->add_option("--seed", seed, "random choice among cancellable pairs");

  auto* count = app.add_subcommand("count", "count algebra maps of the characteristic algebra into F_p");
  count->add_option("input", input, ".skd diagram or .dga dump")->required();
  count->add_option("--variant", variant, "--, -+, +-, ++ or all");
  count->add_option("--p", p, "prime");
  count->add_option("--budget", budget, "solver node budget (default ROSEMAN_BUDGET or 1e8)");
  count->add_option("--out", out, "write the report here");

  auto* hr0 = app.add_subcommand("hr0", "print the degree-0 homology presentation");
  hr0->add_option("input", input, ".skd diagram or .dga dump")->required();
  hr0->add_option("--variant", variant, "--, -+, +- or ++");
  hr0->add_option("--out", out, "write the presentation dump here");

  auto* finger = app.add_subcommand("fingerprint", "map counts for several primes; compares two inputs if given");
  finger->add_option("input", input, ".skd diagram or .dga dump")->required();
  finger->add_option("other", input2, "second input to compare against");
  finger->add_option("--variant", variant, "--, -+, +-, ++ or all");
  finger->add_option("--primes", primes, "comma-separated primes");
  finger->add_option("--budget", budget, "solver node budget");
  finger->add_flag("--hr0", use_hr0, "use the degree-0 homology presentation");
  finger->add_option("--out", out, "write the report here");

  auto* compare = app.add_subcommand("compare", "compare two DGAs up to relabeling");
  compare->add_option("a", input, ".skd diagram or .dga dump")->required();
  compare->add_option("b", input2, ".skd diagram or .dga dump")->required();
  compare->add_option("--script-a", script, "move script applied to a first");
  compare->add_option("--script-b", script2, "move script applied to b first");
  compare->add_option("--relabel", relabel_spec, "label map applied to a, e.g. \"s3=s1 c2=c1\"");
  compare->add_option("--variant", variant, "--, -+, +-, ++ or all");
  compare->add_option("--out", out, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output report{out, {}};
  if (budget == 0) budget = default_budget();
  try {
    if (*validate) {
      auto d = load_diagram(input);
      auto violations = validate_diagram(d);
      for (const auto& v : violations) report.line("violation " + v.rule + ": " + v.detail);
      report.line("validate " + d.name + (violations.empty() ? " ok" : " failed"));
      report.flush();
      return violations.empty() ? 0 : 1;
    }
    if (*build) {
      auto text = dump_dga(build_dga(load_diagram(input), single_variant(variant)));
      if (out.empty()) std::cout << text;
      else write_file(out, text);
      return 0;
    }
    if (*check) {
      bool all_ok = true;
      auto vs = is_dump(input) ? std::vector<Variant>{Variant{}} : variants_for(variant);
      for (auto v : vs) {
        auto dga = load_dga(input, v);
        auto r = check_d_squared(dga);
        for (const auto& f : r.failures)
          report.line("residue " + f.generator.name() + ": " + f.residue.to_string());
        for (const auto& g : r.degree_errors) report.line("degree " + g.name());
        report.line("d2 " + dga.name + " variant=" + dga.variant.tag() + " generators=" +
                    std::to_string(dga.size()) + (r.ok() ? " ok" : " failed"));
        all_ok = all_ok && r.ok();
      }
      report.flush();
      return all_ok ? 0 : 1;
    }
    if (*run) {
      auto dga = load_dga(input, single_variant(variant));
      auto parsed = MoveScript::parse(read_file(script));
      DestabOptions options;
      options.seed = seed;
      options.strict = strict;
      try {
        auto result = run_move_script(dga, parsed, options);
        for (const auto& t : result.trace) std::cout << t << "\n";
        std::cout << "result " << result.dga.name << " variant=" << result.dga.variant.tag()
                  << " generators=" << result.dga.size() << "\n";
        if (!out.empty()) write_file(out, dump_dga(result.dga));
        return 0;
      } catch (const ScriptError& e) {
        for (const auto& t : e.trace) std::cout << t << "\n";
        std::cerr << "script failed: " << e.what() << "\n";
        return 1;
      }
    }
    if (*count) {
      bool all_exact = true;
      auto vs = is_dump(input) ? std::vector<Variant>{Variant{}} : variants_for(variant);
      for (auto v : vs) {
        auto dga = load_dga(input, v);
        auto m = count_algebra_maps(characteristic_presentation(dga), p, budget);
        report.line(m.report() + " variant=" + dga.variant.tag());
        all_exact = all_exact && m.exact;
      }
      report.flush();
      return all_exact ? 0 : 1;
    }
    if (*hr0) {
      auto text = dump_presentation(hr0_presentation(load_dga(input, single_variant(variant))));
      if (out.empty()) std::cout << text;
      else write_file(out, text);
      return 0;
    }
    if (*finger) {
      auto ps = parse_primes(primes);
      bool ok = true;
      auto vs = is_dump(input) ? std::vector<Variant>{Variant{}} : variants_for(variant);
      for (auto v : vs) {
        auto present = [&](const std::string& path) {
          auto dga = load_dga(path, v);
          return use_hr0 ? hr0_presentation(dga) : characteristic_presentation(dga);
        };
        auto fa = fingerprint(present(input), ps, budget);
        for (const auto& c : fa.counts) report.line(c.report() + " variant=" + v.tag() + " input=a");
        for (const auto& c : fa.counts) ok = ok && c.exact;
        if (!input2.empty()) {
          auto fb = fingerprint(present(input2), ps, budget);
          for (const auto& c : fb.counts) report.line(c.report() + " variant=" + v.tag() + " input=b");
          bool same = fa.matches(fb);
          report.line(std::string("fingerprint variant=") + v.tag() + (same ? " equal" : " different"));
          ok = ok && same;
        }
      }
      report.flush();
      return ok ? 0 : 1;
    }
    if (*compare) {
      Relabel map = Relabel::parse(split_ws(relabel_spec));
      bool all_equal = true;
      auto vs = is_dump(input) && is_dump(input2) ? std::vector<Variant>{Variant{}} : variants_for(variant);
      for (auto v : vs) {
        auto a = load_dga(input, v);
        auto b = load_dga(input2, v);
        if (!script.empty()) a = run_move_script(a, MoveScript::parse(read_file(script))).dga;
        if (!script2.empty()) b = run_move_script(b, MoveScript::parse(read_file(script2))).dga;
        auto c = dga_equal_up_to_relabel(a, b, map);
        if (!c.equal) report.line("discrepancy " + c.discrepancy);
        report.line("compare variant=" + a.variant.tag() + (c.equal ? " equal" : " different") +
                    " generators=" + std::to_string(a.size()) + "/" + std::to_string(b.size()));
        all_equal = all_equal && c.equal;
      }
      report.flush();
      return all_equal ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ScriptError& e) {
    std::cerr << "script failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
