#include "zdgb/assemble.hpp"

#include <future>
#include <utility>

#include "zdgb/errors.hpp"

namespace zdgb {

std::string branch_kind_name(BranchKind kind) {
  switch (kind) {
    case BranchKind::Compatible: return "compatible";
    case BranchKind::ProperZero: return "proper-zero";
    case BranchKind::ProperNonzero: return "proper-nonzero";
  }
  return "?";
}

UPoly proper_divisor(const PqrElem& e, const UPoly& q) {
  if (e.is_zero()) return q.monic();
  if (is_unit(e)) return UPoly(1);
  return gcd_with_modulus(e);
}

UPoly reconstruct_eliminant(const UPoly& cp, const std::vector<UPoly>& proper_divisors) {
  UPoly chi = cp;
  for (const auto& c : proper_divisors) chi *= c;
  return chi.monic();
}

namespace {

std::vector<QPoly> project_all(const PqrCtxPtr& ctx, const std::vector<RPoly>& polys) {
  std::vector<QPoly> out;
  for (const auto& f : polys) out.push_back(project(ctx, f));
  return out;
}

// Runs `job(k)` for k in [0, n), concurrently when asked; results keep index order.
template <class R, class Job>
std::vector<R> run_indexed(std::size_t n, bool parallel, Job job) {
  std::vector<R> out;
  out.reserve(n);
  if (!parallel || n < 2) {
    for (std::size_t k = 0; k < n; ++k) out.push_back(job(k));
    return out;
  }
  std::vector<std::future<R>> futures;
  for (std::size_t k = 0; k < n; ++k) futures.push_back(std::async(std::launch::async, job, k));
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

}  // namespace

std::vector<BranchOutcome> run_branches(const PseudoResult& pseudo, const CompatReport& compat,
                                        const EliminationOptions& opts) {
  return run_indexed<BranchOutcome>(compat.composites.size(), opts.parallel, [&](std::size_t k) {
    const CompositeDivisor& cd = compat.composites[k];
    auto ctx = make_pqr(cd.modulus);
    ProperResult pr = proper_eliminant(project_all(ctx, pseudo.basis), ctx, opts.max_iter);
    UPoly c = proper_divisor(pr.e, ctx->modulus());
    return BranchOutcome{cd, pr.e, c, std::move(pr.basis), pr.stats};
  });
}

NewBasis build_new_basis(const PseudoResult& pseudo, const CompatReport& compat,
                         const std::vector<BranchOutcome>& outcomes, const EliminationOptions& opts) {
  NewBasis nb;
  if (pseudo.trivial) {
    nb.trivial = true;
    nb.chi = UPoly(1);
    return nb;
  }
  ZDGB_CHECK(outcomes.size() == compat.composites.size(), "one branch outcome per composite divisor expected");
  if (!compat.cp.is_constant()) {
    auto ctx = make_pqr(compat.cp);
    Branch b{BranchKind::Compatible, ctx->modulus(), ctx->modulus(), ctx, {}};
    for (const auto& f : pseudo.basis) {
      QPoly img = project(ctx, f);
      if (img.is_zero()) continue;
      ZDGB_CHECK(!img.is_constant(), "compatible branch image is a nonzero constant");
      b.basis.push_back(normalize_lc(img));
    }
    nb.compatible = std::move(b);
  }

  std::vector<std::size_t> nontrivial;
  for (std::size_t k = 0; k < outcomes.size(); ++k)
    if (!outcomes[k].proper_divisor.is_constant()) nontrivial.push_back(k);

  nb.proper = run_indexed<Branch>(nontrivial.size(), opts.parallel, [&](std::size_t n) {
    const BranchOutcome& o = outcomes[nontrivial[n]];
    if (o.e.is_zero()) {
      return Branch{BranchKind::ProperZero, o.divisor.modulus, o.proper_divisor, o.e.ctx(), o.basis};
    }
    // Rebuild modulo p = iota(e_q): the proper eliminant there must vanish.
    auto ctx = make_pqr(o.proper_divisor);
    ProperResult pr = proper_eliminant(project_all(ctx, pseudo.basis), ctx, opts.max_iter);
    ZDGB_CHECK(pr.e.is_zero(), "proper eliminant modulo a nontrivial proper divisor is not zero");
    return Branch{BranchKind::ProperNonzero, o.divisor.modulus, o.proper_divisor, ctx, std::move(pr.basis)};
  });

  std::vector<UPoly> divisors;
  for (const auto& b : nb.proper) divisors.push_back(b.proper_divisor);
  nb.chi = reconstruct_eliminant(compat.cp, divisors);
  return nb;
}

Elimination eliminate(const std::vector<RPoly>& generators, const EliminationOptions& opts) {
  Elimination el;
  el.pseudo = pseudo_eliminant(generators);
  if (el.pseudo.trivial) {
    el.compat.cp = UPoly(1);
  } else {
    el.compat = compatible_part(el.pseudo.chi_eps, el.pseudo.multipliers);
    el.outcomes = run_branches(el.pseudo, el.compat, opts);
  }
  el.basis = build_new_basis(el.pseudo, el.compat, el.outcomes, opts);
  return el;
}

Membership membership(const RPoly& f, const NewBasis& nb) {
  Membership m{true, {}};
  if (nb.trivial) return m;
  auto check = [&](const Branch& b) {
    ProperDivision d = proper_divide(b.ctx, project(b.ctx, f), b.basis);
    if (!d.remainder.is_zero()) m.member = false;
    m.evidence.push_back({b.kind, b.proper_divisor, std::move(d.remainder), d.multiplier});
  };
  if (nb.compatible) check(*nb.compatible);
  for (const auto& b : nb.proper) check(b);
  return m;
}

}  // namespace zdgb
