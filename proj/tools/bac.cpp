// bac: generate, transform and verify binary acyclic complexes over Q and F_p.
//
// Exit codes: 0 success / all identities hold, 1 an identity failed,
// 2 invalid input (malformed JSON, non-prime modulus, unknown suite, ...).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bac/bac.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

bac::FieldDesc parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return bac::FieldDesc::rationals();
  std::string prefix = "fp:";
  if (text.rfind(prefix, 0) == 0) {
    std::uint64_t p = std::stoull(text.substr(prefix.size()));
    if (!bac::is_prime_u64(p)) throw bac::ParseError("modulus " + std::to_string(p) + " is not prime");
    return bac::FieldDesc::prime(p);
  }
  throw bac::ParseError("bad field spec '" + text + "' (expected q or fp:P)");
}

bac::json read_json(const std::string& path) {
  try {
    if (path.empty() || path == "-") return bac::json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw bac::ParseError("cannot open " + path);
    return bac::json::parse(in);
  } catch (const bac::json::parse_error& e) {
    throw bac::ParseError(std::string("malformed JSON: ") + e.what());
  }
}

void write_json(const bac::json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw bac::ParseError("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

int default_trials() {
  if (const char* env = std::getenv("BAC_TRIALS")) return std::max(1, std::atoi(env));
  return 100;
}

struct GenArgs {
  std::string kind = "binary";
  std::string field = "fp:101";
  std::uint64_t seed = 1;
  std::size_t length = 3;
  std::size_t max_rank = 2;
  long long entry_bound = 3;
  bool split = false;
  bool identity_maps = false;
  std::string output;
};

int cmd_gen(const GenArgs& a) {
  bac::GenConfig cfg{a.seed, parse_field(a.field), a.max_rank, a.length, a.entry_bound};
  bac::json j;
  if (a.kind == "acyclic")
    j = bac::to_json(bac::gen_acyclic(cfg));
  else if (a.kind == "binary")
    j = bac::to_json(bac::gen_binary(cfg));
  else if (a.kind == "ladder")
    j = bac::to_json(bac::gen_ladder(cfg, a.identity_maps));
  else if (a.kind == "ses")
    j = bac::to_json(bac::gen_ses(cfg, a.split));
  else if (a.kind == "nenashev")
    j = bac::to_json(bac::gen_nenashev(cfg));
  else
    throw bac::ParseError("unknown kind '" + a.kind + "'");
  write_json(j, a.output);
  return kExitOk;
}

int cmd_torsion(const std::string& input) {
  bac::json j = read_json(input);
  bac::Scalar t = [&] {
    if (j.contains("terms")) return bac::eval_torsion(bac::relation_from_json(j));
    if (j.contains("top")) return bac::binary_torsion(bac::binary_from_json(j));
    if (j.contains("diff")) return bac::chain_torsion(bac::chain_from_json(j));
    throw bac::ParseError("input is not a complex or relation");
  }();
  std::cout << t.str() << "\n";
  return kExitOk;
}

int cmd_shorten(const std::string& input, const std::string& op, const std::string& output) {
  bac::json j = read_json(input);
  bac::BinaryComplex p = bac::binary_from_json(j);
  bac::json out;
  if (op == "short")
    out = bac::to_json(bac::shorten(p));
  else if (op == "tau")
    out = bac::to_json(bac::tau_of(p));
  else if (op == "tge1")
    out = bac::to_json(bac::truncate_ge1(p));
  else if (op == "tle2")
    out = bac::to_json(bac::truncate_le2(p));
  else if (op == "sw")
    out = bac::to_json(bac::swap_top_bottom(p));
  else if (op == "shift1")
    out = bac::to_json(bac::shift_binary(p, 1));
  else if (op == "ik")
    out = bac::to_json(bac::extend_support(p));
  else if (op == "pk")
    out = bac::to_json(bac::shortening_inverse(p));
  else
    throw bac::ParseError("unknown op '" + op + "'");
  write_json(out, output);
  return kExitOk;
}

int cmd_total(const std::string& input, bool decompose, const std::string& output) {
  bac::json j = read_json(input);
  if (j.contains("sigma")) {
    write_json(bac::to_json(bac::ladder_total(bac::ladder_from_json(j))), output);
    return kExitOk;
  }
  if (j.contains("rows")) {
    bac::NenashevDiagram d = bac::nenashev_from_json(j);
    if (!bac::validate_nenashev(d)) throw bac::ParseError("diagram does not validate");
    if (!decompose) {
      write_json(bac::to_json(bac::nenashev_total(d)), output);
    } else {
      bac::NenashevDecomposition dec = bac::nenashev_decomposition(d);
      bac::json out;
      out["total"] = bac::to_json(dec.total);
      out["reduced"] = bac::to_json(dec.reduced);
      out["bottom_piece"] = bac::to_json(dec.bottom_piece);
      out["front_piece"] = bac::to_json(dec.front_piece);
      out["middle_piece"] = bac::to_json(dec.middle_piece);
      out["columns"] = {bac::to_json(dec.columns[0]), bac::to_json(dec.columns[1]),
                        bac::to_json(dec.columns[2])};
      write_json(out, output);
    }
    return kExitOk;
  }
  throw bac::ParseError("input is neither a ladder nor a diagram");
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials, const std::string& field,
               std::size_t max_rank, long long entry_bound) {
  bac::VerifyOptions opts;
  opts.seed = seed;
  opts.trials = trials;
  opts.field = parse_field(field);
  opts.max_rank = max_rank;
  opts.entry_bound = entry_bound;

  std::vector<std::string> todo;
  if (suite == "all")
    todo = bac::suite_names();
  else
    todo.push_back(suite);

  bac::json out = bac::json::array();
  bool failed = false;
  for (const auto& name : todo) {
    bac::SuiteReport r = bac::run_suite(name, opts);
    failed = failed || !r.ok();
    std::cerr << (r.ok() ? "ok   " : "FAIL ") << name << "  (" << r.trials << " trials, "
              << static_cast<long>(r.elapsed_ms) << " ms, " << r.failures.size() << " failures)\n";
    out.push_back(bac::report_to_json(r, opts));
  }
  std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  return failed ? kExitFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary acyclic complexes, torsion and identity verification"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a random instance as JSON");
  gen->add_option("--kind", gen_args.kind, "acyclic|binary|ladder|ses|nenashev");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--field", gen_args.field, "q or fp:P");
  gen->add_option("--length", gen_args.length, "support bound k");
  gen->add_option("--max-rank", gen_args.max_rank, "bound on image ranks");
  gen->add_option("--entry-bound", gen_args.entry_bound, "entry magnitude bound over Q");
  gen->add_flag("--split", gen_args.split, "ses: zero connecting maps");
  gen->add_flag("--identity-maps", gen_args.identity_maps, "ladder: identity sigma and tau");
  gen->add_option("-o,--output", gen_args.output, "output file (default stdout)");

  std::string torsion_input;
  auto* torsion = app.add_subcommand("torsion", "print the torsion of a complex or relation");
  torsion->add_option("input", torsion_input, "input file (default stdin)");

  std::string shorten_input, shorten_op = "short", shorten_output;
  auto* shorten = app.add_subcommand("shorten", "shortening-family transforms of a binary complex");
  shorten->add_option("input", shorten_input, "input file (default stdin)");
  shorten->add_option("--op", shorten_op, "short|tau|tge1|tle2|sw|shift1|ik|pk");
  shorten->add_option("-o,--output", shorten_output, "output file (default stdout)");

  std::string total_input, total_output;
  bool total_decompose = false;
  auto* total = app.add_subcommand("total", "total complex of a ladder or 3x3 diagram");
  total->add_option("input", total_input, "input file (default stdin)");
  total->add_flag("--decompose", total_decompose, "diagram: emit T' and its pieces");
  total->add_option("-o,--output", total_output, "output file (default stdout)");

  std::string verify_suite = "all", verify_field = "fp:101";
  std::uint64_t verify_seed = 1;
  int verify_trials = default_trials();
  std::size_t verify_max_rank = 2;
  long long verify_entry_bound = 3;
  auto* verify = app.add_subcommand("verify", "run a named identity suite");
  verify->add_option("--suite", verify_suite, "suite name or 'all'");
  verify->add_option("--seed", verify_seed, "base seed");
  verify->add_option("--trials", verify_trials, "trials per suite (env BAC_TRIALS overrides default)");
  verify->add_option("--field", verify_field, "q or fp:P");
  verify->add_option("--max-rank", verify_max_rank, "bound on image ranks");
  verify->add_option("--entry-bound", verify_entry_bound, "entry magnitude bound over Q");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(gen_args);
    if (torsion->parsed()) return cmd_torsion(torsion_input);
    if (shorten->parsed()) return cmd_shorten(shorten_input, shorten_op, shorten_output);
    if (total->parsed()) return cmd_total(total_input, total_decompose, total_output);
    if (verify->parsed())
      return cmd_verify(verify_suite, verify_seed, verify_trials, verify_field, verify_max_rank,
                        verify_entry_bound);
  } catch (const bac::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const bac::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
