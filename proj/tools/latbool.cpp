// latbool: run, verify and draw Boolean operations on lattice regions.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latbool/error.hpp"
#include "latbool/io.hpp"
#include "latbool/setops.hpp"
#include "latbool/verify.hpp"

namespace fs = std::filesystem;
using namespace latbool;

namespace {

constexpr int kInputError = 1;
constexpr int kInvariantError = 2;

const std::map<std::string, Mode> kModes{
    {"exact", Mode::exact}, {"inner", Mode::inner}, {"outer", Mode::outer}};
const std::map<std::string, BoolOp> kOps{{"intersect", BoolOp::intersection},
                                         {"intersection", BoolOp::intersection},
                                         {"union", BoolOp::union_},
                                         {"diff", BoolOp::difference},
                                         {"difference", BoolOp::difference}};

int run_op(BoolOp op, Mode mode, const std::string& fa, const std::string& fb,
           const std::string& out) {
  Region a = read_region_file(fa);
  Region b = read_region_file(fb);
  OpResult r = apply(OpRequest{op, mode, a, b});
  write_region_file(out, r.result);
  std::cout << "n=" << r.exact.stats.n << " k=" << r.exact.stats.k << " h=" << r.exact.stats.h
            << " |P|=" << vertex_count(r.exact.region) << " |out|=" << vertex_count(r.result)
            << '\n';
  return 0;
}

bool print_report(const std::string& label, const VerifyReport& rep) {
  std::cout << "== " << label << " (" << to_string(rep.op) << ")";
  if (rep.inner_equals_exact && rep.outer_equals_exact) std::cout << ", inner = exact = outer";
  std::cout << '\n';
  for (const auto& c : rep.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << '[' << to_string(c.kind) << "] " << c.name;
    if (!c.passed && !c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << '\n';
  }
  return rep.ok();
}

std::vector<BoolOp> ops_for(const std::string& name) {
  if (name == "all") return {BoolOp::intersection, BoolOp::union_, BoolOp::difference};
  return {kOps.at(name)};
}

int verify_pair(const std::string& fa, const std::string& fb, const std::string& op,
                const std::string& against, const std::string& against_mode) {
  Region a = read_region_file(fa);
  Region b = read_region_file(fb);
  std::optional<Substitute> sub;
  if (!against.empty()) {
    if (op == "all") throw PreconditionError("--against needs a single --op");
    Mode m = kModes.at(against_mode);
    sub = Substitute{m, read_region_file(against, m == Mode::exact ? Coordinates::rational
                                                                   : Coordinates::integer)};
  }
  bool ok = true;
  for (BoolOp o : ops_for(op)) ok = print_report(fa + " " + fb, verify_case(a, b, o, sub)) && ok;
  std::cout << (ok ? "all properties hold" : "verification FAILED") << '\n';
  return ok ? 0 : kInvariantError;
}

// Cases are NAME.a.lpr / NAME.b.lpr pairs.
int verify_batch(const std::string& dir, const std::string& op) {
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::string f = e.path().filename().string();
    const std::string suffix = ".a.lpr";
    if (f.size() > suffix.size() && f.compare(f.size() - suffix.size(), suffix.size(), suffix) == 0) {
      names.push_back(f.substr(0, f.size() - suffix.size()));
    }
  }
  std::sort(names.begin(), names.end());
  if (names.empty()) throw Error("no NAME.a.lpr / NAME.b.lpr pairs in " + dir);
  std::size_t failed = 0;
  for (const auto& name : names) {
    fs::path pa = fs::path(dir) / (name + ".a.lpr");
    fs::path pb = fs::path(dir) / (name + ".b.lpr");
    Region a = read_region_file(pa.string());
    Region b = read_region_file(pb.string());
    bool ok = true;
    for (BoolOp o : ops_for(op)) ok = print_report(name, verify_case(a, b, o)) && ok;
    if (!ok) ++failed;
  }
  std::cout << names.size() - failed << '/' << names.size() << " cases pass\n";
  return failed == 0 ? 0 : kInvariantError;
}

int run_svg(const std::vector<std::string>& inputs, const std::string& out) {
  std::vector<SvgLayer> layers;
  for (const auto& f : inputs) {
    layers.push_back({fs::path(f).stem().string(), read_region_file(f, Coordinates::rational)});
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) throw Error("cannot write " + out);
  os << render_svg(layers);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and lattice-rounded Boolean operations on polygonal regions"};
  app.require_subcommand(1);

  struct OpArgs {
    std::string mode = "exact", a, b, out;
  };
  std::map<std::string, OpArgs> op_args;
  for (const char* name : {"intersect", "union", "diff"}) {
    auto& args = op_args[name];
    auto* sub = app.add_subcommand(name, std::string("Compute A ") + name + " B");
    sub->add_option("--mode", args.mode, "exact, inner or outer")
        ->check(CLI::IsMember({"exact", "inner", "outer"}));
    sub->add_option("A", args.a, "First operand (.lpr)")->required()->check(CLI::ExistingFile);
    sub->add_option("B", args.b, "Second operand (.lpr)")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", args.out, "Result file")->required();
  }

  std::string batch, va, vb, vop = "all", against, against_mode = "inner";
  auto* verify = app.add_subcommand("verify", "Check every guarantee against the oracles");
  auto* batch_opt = verify->add_option("--batch", batch, "Directory of NAME.a.lpr / NAME.b.lpr")
                        ->check(CLI::ExistingDirectory);
  auto* a_opt = verify->add_option("A", va, "First operand")->check(CLI::ExistingFile);
  auto* b_opt = verify->add_option("B", vb, "Second operand")->check(CLI::ExistingFile);
  verify->add_option("--op", vop, "intersect, union, diff or all")
      ->check(CLI::IsMember({"intersect", "union", "diff", "all"}));
  auto* against_opt =
      verify->add_option("--against", against, "Use this file as the result of --mode")
          ->check(CLI::ExistingFile);
  verify->add_option("--mode", against_mode, "Mode the --against file stands for")
      ->check(CLI::IsMember({"exact", "inner", "outer"}));
  batch_opt->excludes(a_opt)->excludes(b_opt)->excludes(against_opt);
  a_opt->needs(b_opt);
  b_opt->needs(a_opt);

  std::vector<std::string> svg_in;
  std::string svg_out;
  auto* svg = app.add_subcommand("svg", "Draw regions over the lattice grid");
  svg->add_option("inputs", svg_in, "Region files, one layer each")->required()->check(CLI::ExistingFile);
  svg->add_option("-o,--output", svg_out, "SVG file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& [name, args] : op_args) {
      if (app.got_subcommand(name)) {
        return run_op(kOps.at(name), kModes.at(args.mode), args.a, args.b, args.out);
      }
    }
    if (app.got_subcommand(verify)) {
      if (!batch.empty()) return verify_batch(batch, vop);
      if (va.empty()) {
        std::cerr << "verify: give --batch DIR or A B\n";
        return kInputError;
      }
      return verify_pair(va, vb, vop, against, against_mode);
    }
    if (app.got_subcommand(svg)) return run_svg(svg_in, svg_out);
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant failed: " << e.what() << '\n';
    return kInvariantError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}
