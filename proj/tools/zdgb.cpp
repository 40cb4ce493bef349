// Command-line driver: eliminate, basis, member, oracle, check, bench.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zdgb/bench.hpp"
#include "zdgb/convert.hpp"
#include "zdgb/errors.hpp"
#include "zdgb/parser.hpp"
#include "zdgb/report.hpp"

using namespace zdgb;

namespace {

constexpr int kOk = 0, kMismatch = 1, kInputError = 2, kInternal = 3;

struct Options {
  std::string file;
  std::string order;
  std::size_t max_iter = 200000;
  bool parallel = false;
  bool json = false;
  std::string output;
  std::string poly;
  std::vector<unsigned> ms{4, 8, 16, 32};
  unsigned trials = 20;
  std::uint64_t seed = 1;
};

class Clock {
 public:
  double lap_ms() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw InputError("cannot write '" + o.output + "'");
  out << text;
}

Problem load(const Options& o) {
  std::optional<OrderKind> kind;
  if (!o.order.empty()) kind = parse_order_kind(o.order);
  return make_problem(load_system(o.file), kind);
}

EliminationOptions elim_opts(const Options& o) { return EliminationOptions{o.max_iter, o.parallel}; }

int cmd_eliminate(const Options& o) {
  Problem p = load(o);
  Clock clock;
  Elimination el = eliminate(tilde_generators(p), elim_opts(o));
  double total = clock.lap_ms();
  Json doc = elimination_json(p, el);
  doc["timing"] = Json{{"total_ms", total}};
  emit(o, doc.dump(2) + "\n");
  return kOk;
}

int cmd_basis(const Options& o) {
  Problem p = load(o);
  Elimination el = eliminate(tilde_generators(p), elim_opts(o));
  if (o.json) {
    Json doc = elimination_json(p, el);
    emit(o, Json{{"chi", doc["chi"]}, {"new_basis", doc["new_basis"]}}.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream os;
  const NewBasis& nb = el.basis;
  os << "chi = " << render_u(p, nb.chi) << "\n";
  if (nb.trivial) os << "the ideal is <1>\n";
  auto print = [&](const Branch& b) {
    os << "\n[" << branch_kind_name(b.kind) << "] modulus " << render_u(p, b.proper_divisor) << "\n";
    for (const auto& f : b.basis) os << "  " << render_display(p, lift(f)) << "\n";
  };
  if (nb.compatible) print(*nb.compatible);
  for (const auto& b : nb.proper) print(b);
  emit(o, os.str());
  return kOk;
}

int cmd_member(const Options& o) {
  Problem p = load(o);
  FieldPoly f = parse_in(p, o.poly);
  Elimination el = eliminate(tilde_generators(p), elim_opts(o));
  Membership m = membership(to_tilde(p, f), el.basis);
  Json doc = membership_json(p, f, m);
  if (o.json) {
    emit(o, doc.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream os;
  os << (m.member ? "member" : "not a member") << "\n";
  for (const auto& b : doc["branches"])
    os << "  " << b["kind"].get<std::string>() << " mod " << b["modulus"].get<std::string>()
       << ": remainder " << b["remainder"].get<std::string>() << "\n";
  emit(o, os.str());
  return kOk;
}

int cmd_oracle(const Options& o) {
  Problem p = load(o);
  std::vector<FieldPoly> gb;
  UPoly chi = eliminant_oracle(p.flat_generators, &gb);
  Json doc = oracle_json(p, gb, chi);
  if (o.json) {
    emit(o, doc.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream os;
  for (const auto& g : doc["basis"]) os << g.get<std::string>() << "\n";
  os << "chi = " << render_u(p, chi) << "\n";
  emit(o, os.str());
  return kOk;
}

int cmd_check(const Options& o) {
  Problem p = load(o);
  Elimination el = eliminate(tilde_generators(p), elim_opts(o));
  UPoly oracle = eliminant_oracle(p.flat_generators);
  bool same = oracle == el.basis.chi;
  bool cp_divides = divides(el.compat.cp, oracle);
  bool divisors_divide = true;
  for (const auto& b : el.basis.proper) divisors_divide = divisors_divide && divides(b.proper_divisor, oracle);
  bool ok = same && cp_divides && divisors_divide;
  Json doc{{"chi", render_u(p, el.basis.chi)},
           {"oracle_chi", render_u(p, oracle)},
           {"equal", same},
           {"cp_divides_oracle", cp_divides},
           {"proper_divisors_divide_oracle", divisors_divide}};
  if (o.json) {
    emit(o, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "new basis chi: " << doc["chi"].get<std::string>() << "\n"
       << "oracle chi:    " << doc["oracle_chi"].get<std::string>() << "\n"
       << (ok ? "OK" : "MISMATCH") << "\n";
    emit(o, os.str());
  }
  return ok ? kOk : kMismatch;
}

int cmd_bench(const Options& o) {
  emit(o, bench_csv(bench_spoly_compare(o.ms, o.trials, o.seed)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eliminants and a new type of Groebner basis for zero-dimensional ideals over Q"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool with_file) {
    if (with_file) sub->add_option("file", o.file, "system file")->required()->check(CLI::ExistingFile);
    sub->add_option("--order", o.order, "monomial order on the non-eliminated variables: lex, grlex, grevlex");
    sub->add_option("--max-iter", o.max_iter, "iteration cap of the proper eliminant algorithm");
    sub->add_flag("--parallel", o.parallel, "compute branches concurrently");
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("-o,--output", o.output, "write output to a file");
    sub->add_option("--seed", o.seed, "random seed");
  };
  auto* elim = app.add_subcommand("eliminate", "full pipeline, JSON result document");
  common(elim, true);
  auto* basis = app.add_subcommand("basis", "print the new basis");
  common(basis, true);
  auto* member = app.add_subcommand("member", "ideal membership test");
  common(member, true);
  member->add_option("--poly", o.poly, "polynomial to test")->required();
  auto* oracle = app.add_subcommand("oracle", "reduced Groebner basis and eliminant by Buchberger's algorithm");
  common(oracle, true);
  auto* check = app.add_subcommand("check", "compare the eliminant with the Buchberger oracle");
  common(check, true);
  auto* bench = app.add_subcommand("bench", "S-polynomial operation counts, CSV");
  common(bench, false);
  bench->add_option("--m", o.ms, "size parameters")->delimiter(',');
  bench->add_option("--trials", o.trials, "trials per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }
  try {
    if (*elim) return cmd_eliminate(o);
    if (*basis) return cmd_basis(o);
    if (*member) return cmd_member(o);
    if (*oracle) return cmd_oracle(o);
    if (*check) return cmd_check(o);
    if (*bench) return cmd_bench(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
