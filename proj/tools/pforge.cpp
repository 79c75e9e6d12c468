// pforge: command-line front end for the permutation-pattern engine.
//
// Exit codes: 0 success / verification PASS, 1 verification FAIL,
// 2 usage or parse error, 3 resource limit exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pforge/bisc.hpp"
#include "pforge/corpus.hpp"
#include "pforge/io.hpp"
#include "pforge/pattern.hpp"
#include "pforge/perm.hpp"
#include "pforge/preimage.hpp"
#include "pforge/sorters.hpp"

namespace {

using namespace pforge;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

int default_threads() {
  if (const char* env = std::getenv("PATTERN_FORGE_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

// One permutation per line; blank lines skipped; parse errors carry the line
// number.
std::vector<Perm> read_perm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Error::Kind::invalid_input, "cannot open input file: " + path);
  std::vector<Perm> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    try {
      out.push_back(parse_perm(line));
    } catch (const Error& e) {
      throw Error(Error::Kind::invalid_input,
                  path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

struct CommonInput {
  std::string input_file;
  std::string class_name;
  int max_len = 0;
};

std::vector<Perm> load_input(const CommonInput& ci, int max_n) {
  if (!ci.class_name.empty()) {
    if (ci.max_len <= 0) {
      throw Error(Error::Kind::invalid_input, "--max-len is required with --class");
    }
    return named_class(ci.class_name, ci.max_len, max_n);
  }
  if (ci.input_file.empty()) {
    throw Error(Error::Kind::invalid_input, "either --input or --class is required");
  }
  return read_perm_file(ci.input_file);
}

DeviceSpec parse_device(const std::string& name, int d) {
  if (name == "stack") return DeviceSpec{Device::stack, kUnboundedDepth};
  if (name == "stackd") {
    if (d < 1) {
      throw Error(Error::Kind::invalid_input, "--d (>= 1) is required with --device stackd");
    }
    return DeviceSpec{Device::stack_depth, d};
  }
  if (name == "queue") return DeviceSpec{Device::queue, 0};
  throw Error(Error::Kind::unsupported, "unsupported device: " + name);
}

std::vector<DecoratedPattern> mesh_to_decorated(const std::vector<MeshPattern>& ms) {
  std::vector<DecoratedPattern> out;
  for (const MeshPattern& m : ms) out.push_back(as_decorated(m));
  return out;
}

void print_patterns(const std::vector<DecoratedPattern>& ps, bool json) {
  if (json) {
    std::cout << patterns_to_json(ps) << "\n";
  } else {
    for (const DecoratedPattern& p : ps) std::cout << pattern_to_string(p) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pforge: permutation patterns, conjecture mining, and sorting devices"};
  app.require_subcommand(1);

  bool json = false;
  int threads = default_threads();
  int max_n = 9;
  int max_m = 6;
  app.add_flag("--json", json, "emit machine-readable JSON");
  app.add_option("--threads", threads, "worker threads (env PATTERN_FORGE_THREADS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-n", max_n, "guard bound on enumeration length (default 9)");
  app.add_option("--max-m", max_m, "guard bound on mined pattern length (default 6)");

  CommonInput ci;
  int m = 3;
  int n = 0;
  bool upto = false;
  std::string perm_text, pattern_text, pipeline_text, device_name, class_name;
  int depth = 0;
  bool trace = false;

  auto add_input_opts = [&](CLI::App* cmd) {
    cmd->add_option("--input", ci.input_file, "file with one permutation per line");
    cmd->add_option("--class", ci.class_name, "named class (see 'class --list')");
    cmd->add_option("--max-len", ci.max_len, "length bound for --class");
  };

  CLI::App* cmd_mine = app.add_subcommand("mine", "maximal allowed shadings per pattern");
  add_input_opts(cmd_mine);
  cmd_mine->add_option("-m,--pattern-len", m, "maximal pattern length")->required();

  CLI::App* cmd_bisc = app.add_subcommand("bisc", "conjecture a mesh-pattern basis");
  add_input_opts(cmd_bisc);
  cmd_bisc->add_option("-m,--pattern-len", m, "maximal pattern length")->required();

  CLI::App* cmd_avoid = app.add_subcommand("avoiders", "enumerate avoiders of a basis");
  cmd_avoid->add_option("--basis", pattern_text, "semicolon-separated patterns")->required();
  cmd_avoid->add_option("--n", n, "permutation length")->required();
  cmd_avoid->add_flag("--upto", upto, "all lengths 1..n");

  CLI::App* cmd_contains = app.add_subcommand("contains", "test pattern containment");
  cmd_contains->add_option("--pattern", pattern_text, "pattern in text notation")->required();
  cmd_contains->add_option("--perm", perm_text, "host permutation")->required();

  CLI::App* cmd_sort = app.add_subcommand("sort", "run a sorting pipeline");
  cmd_sort->add_option("--perm", perm_text, "input permutation")->required();
  cmd_sort->add_option("--pipeline", pipeline_text,
                       "comma-separated stages: stack,stackd:<d>,queue,rev,comp,qpass")
      ->required();
  cmd_sort->add_flag("--trace", trace, "print each intermediate permutation");

  CLI::App* cmd_pre = app.add_subcommand("preimage", "decorated-pattern preimage basis");
  cmd_pre->add_option("--device", device_name, "stack | stackd | queue")->required();
  cmd_pre->add_option("--d", depth, "stack depth for stackd");
  cmd_pre->add_option("--pattern", pattern_text, "semicolon-separated classical targets")
      ->required();

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "check a preimage basis against the brute-force oracle");
  cmd_verify->add_option("--device", device_name, "stack | stackd | queue")->required();
  cmd_verify->add_option("--d", depth, "stack depth for stackd");
  cmd_verify->add_option("--pattern", pattern_text, "semicolon-separated classical targets")
      ->required();
  cmd_verify->add_option("--n", n, "verify all lengths 1..n")->required();

  CLI::App* cmd_check = app.add_subcommand("check4312", "linear-time 4312 avoidance");
  cmd_check->add_option("--perm", perm_text, "a single permutation");
  cmd_check->add_option("--input", ci.input_file, "file with one permutation per line");

  CLI::App* cmd_class = app.add_subcommand("class", "members of a named class");
  cmd_class->add_option("--name", class_name, "class name");
  cmd_class->add_option("--n", n, "length bound");
  bool list_classes = false;
  cmd_class->add_flag("--list", list_classes, "list the known class names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_mine->parsed()) {
      if (m > max_m) {
        throw Error(Error::Kind::resource_limit, "-m exceeds --max-m");
      }
      const MineResult mr = mine(load_input(ci, max_n), m, threads);
      std::vector<DecoratedPattern> out;
      for (const auto& [p, fam] : mr.entries) {
        for (CellSet s : fam.shadings) out.push_back(DecoratedPattern{p, s, {}, {}, {}});
      }
      print_patterns(out, json);
    } else if (cmd_bisc->parsed()) {
      if (m > max_m) {
        throw Error(Error::Kind::resource_limit, "-m exceeds --max-m");
      }
      print_patterns(mesh_to_decorated(bisc(load_input(ci, max_n), m, threads)), json);
    } else if (cmd_avoid->parsed()) {
      const auto basis = parse_pattern_list(pattern_text);
      for (const Perm& pi : enumerate_avoiders(basis, n, upto, max_n)) {
        std::cout << perm_to_string(pi) << "\n";
      }
    } else if (cmd_contains->parsed()) {
      const bool yes = contains_decorated(parse_perm(perm_text), parse_pattern(pattern_text));
      std::cout << (yes ? "true" : "false") << "\n";
    } else if (cmd_sort->parsed()) {
      const Perm pi = parse_perm(perm_text);
      std::vector<Perm> stages;
      const Perm out = run_pipeline(pi, parse_pipeline(pipeline_text), &stages);
      if (trace) {
        for (const Perm& s : stages) std::cout << perm_to_string(s) << "\n";
      } else {
        std::cout << perm_to_string(out) << "\n";
      }
    } else if (cmd_pre->parsed()) {
      const DeviceSpec dev = parse_device(device_name, depth);
      std::vector<Perm> targets;
      for (const DecoratedPattern& p : parse_pattern_list(pattern_text)) {
        if (p.shading || !p.marks.empty() || !p.avoid.empty() || !p.contain.empty()) {
          throw Error(Error::Kind::unsupported, "preimage targets must be classical");
        }
        targets.push_back(p.pat);
      }
      print_patterns(preimage_basis(dev, targets).patterns, json);
    } else if (cmd_verify->parsed()) {
      const DeviceSpec dev = parse_device(device_name, depth);
      std::vector<Perm> targets;
      for (const DecoratedPattern& p : parse_pattern_list(pattern_text)) {
        targets.push_back(p.pat);
      }
      const PreimageBasis basis = preimage_basis(dev, targets);
      const VerifyReport report = verify_basis(
          [&](const Perm& pi) {
            const Perm image = dev.apply(pi);
            for (const Perm& t : targets) {
              if (contains_classical(image, t)) return false;
            }
            return true;
          },
          basis.patterns, std::min(n, max_n));
      if (report.ok) {
        std::cout << "PASS\n";
      } else {
        std::cout << "FAIL " << perm_to_string(report.counterexample) << " "
                  << (report.extra ? "extra-avoider" : "missing-avoider") << "\n";
        return kExitFail;
      }
    } else if (cmd_check->parsed()) {
      std::vector<Perm> inputs;
      if (!perm_text.empty()) {
        inputs.push_back(parse_perm(perm_text));
      } else if (!ci.input_file.empty()) {
        inputs = read_perm_file(ci.input_file);
      } else {
        throw Error(Error::Kind::invalid_input, "check4312 needs --perm or --input");
      }
      for (const Perm& pi : inputs) {
        std::cout << (avoids_4312_linear(pi) ? "true" : "false") << "\n";
      }
    } else if (cmd_class->parsed()) {
      if (list_classes) {
        for (const std::string& name : named_class_names()) std::cout << name << "\n";
      } else {
        if (class_name.empty() || n <= 0) {
          throw Error(Error::Kind::invalid_input, "class needs --name and --n (or --list)");
        }
        for (const Perm& pi : named_class(class_name, n, max_n)) {
          std::cout << perm_to_string(pi) << "\n";
        }
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == Error::Kind::resource_limit ? kExitResource : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
