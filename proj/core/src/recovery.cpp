#include "antihorn/recovery.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "hashing.hpp"

namespace antihorn {

namespace {

constexpr std::uint64_t kTagStar = 0x73746172u;   // designated sparse word
constexpr std::uint64_t kTagFresh = 0x66726573u;  // decoy outside S

std::uint64_t lengthCap(const Poly2& length_bound, std::uint64_t n_prime, int m) {
  return length_bound(n_prime, static_cast<std::uint64_t>(m));
}

}  // namespace

int chooseM(std::uint64_t n, std::uint64_t n_prime, const Poly2& p) {
  if (n == 0) throw std::invalid_argument("choose_m: n must be at least 1");
  for (int m = 2; m <= 126; m *= 3) {
    const unsigned __int128 field_size = static_cast<unsigned __int128>(1) << m;
    std::uint64_t bound = 0;
    try {
      bound = p(n_prime, static_cast<std::uint64_t>(m));
    } catch (const std::overflow_error&) {
      continue;  // p overflows uint64 here; 2^m certainly has not caught up yet
    }
    if (field_size >= static_cast<unsigned __int128>(n) * bound) return m;
  }
  throw std::logic_error("choose_m: no field degree within the desk-scale cap satisfies the bound");
}

std::size_t distinctUCount(const std::vector<std::pair<FieldElement, FieldElement>>& pairs) {
  std::set<std::uint32_t> us;
  for (const auto& [u, v] : pairs) us.insert(u.bits);
  return us.size();
}

SupportMap collectCandidateWords(const RecoveryInstance& inst, const FieldCtx& ctx, int jobs) {
  if (!inst.reduction) throw std::invalid_argument("recover: instance has no reduction");
  if (jobs < 1) throw std::invalid_argument("recover: jobs must be at least 1");
  const std::uint64_t order = ctx.order();
  const std::uint64_t len_cap = lengthCap(inst.length_bound, inst.n_prime, ctx.degree());

  auto sweep = [&](std::uint64_t lo, std::uint64_t hi) {
    SupportMap local;
    for (std::uint64_t ub = lo; ub < hi; ++ub) {
      const FieldElement u = ctx.element(ub);
      for (std::uint64_t vb = 0; vb < order; ++vb) {
        const FieldElement v = ctx.element(vb);
        std::vector<Word> words = inst.reduction(ctx, u, v);
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        for (const Word& w : words) {
          if (static_cast<std::uint64_t>(w.size()) > len_cap)
            throw std::invalid_argument("recover: reduction emitted a word longer than its length bound");
          local[w].emplace_back(u, v);
        }
      }
    }
    return local;
  };

  const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), order));
  std::vector<std::future<SupportMap>> stripes;
  for (int i = 1; i < workers; ++i) {
    const std::uint64_t lo = order * i / workers;
    const std::uint64_t hi = order * (i + 1) / workers;
    stripes.push_back(std::async(std::launch::async, sweep, lo, hi));
  }
  SupportMap merged = sweep(0, order * 1 / workers);
  // Stripes cover ascending u ranges and are merged in that order, so every
  // support list comes out u-ascending regardless of the worker count.
  for (auto& stripe : stripes) {
    SupportMap part = stripe.get();
    for (auto& [w, pairs] : part) {
      auto& dst = merged[w];
      dst.insert(dst.end(), pairs.begin(), pairs.end());
    }
  }
  return merged;
}

std::vector<std::uint8_t> recoverAssignment(const RecoveryInstance& inst, int jobs) {
  const std::uint64_t n = static_cast<std::uint64_t>(inst.phi.numVars());
  if (inst.n_prime < n)
    throw std::invalid_argument("recover: formula size measure smaller than its variable count");
  const int m = chooseM(n, inst.n_prime, inst.census_bound);
  const FieldCtx ctx = FieldCtx::build(m);

  const std::uint64_t len_cap = lengthCap(inst.length_bound, inst.n_prime, m);
  const int census_len = static_cast<int>(std::min<std::uint64_t>(len_cap, Word::kMaxLength));
  if (inst.sparse_set.countUpToLength(census_len) > inst.census_bound(inst.n_prime, static_cast<std::uint64_t>(m)))
    throw std::invalid_argument("recover: sparse census bound violated at the chosen field degree");

  const SupportMap support = collectCandidateWords(inst, ctx, jobs);

  struct Candidate {
    const std::vector<std::pair<FieldElement, FieldElement>>* pairs;
    std::size_t support;
  };
  std::vector<Candidate> candidates;
  for (const auto& [w, pairs] : support) {
    const std::size_t count = distinctUCount(pairs);
    if (count >= n) candidates.push_back({&pairs, count});
  }
  // Descending support; the map already yields words length-lex, which the
  // stable sort preserves within equal support.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.support > b.support; });

  std::size_t non_boolean = 0;
  for (const Candidate& cand : candidates) {
    // n smallest supporting u's; lists are u-ascending with v ascending
    // within each u, so the first pair per u already has the smallest v.
    std::vector<FieldElement> us, vs;
    for (const auto& [u, v] : *cand.pairs) {
      if (!us.empty() && us.back() == u) continue;
      us.push_back(u);
      vs.push_back(v);
      if (us.size() == n) break;
    }
    const std::vector<FieldElement> coeffs = solveVandermonde(ctx, us, vs);
    std::uint64_t mask = 0;
    bool boolean_ok = true;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == ctx.one())
        mask |= std::uint64_t{1} << j;
      else if (coeffs[j] != ctx.zero()) {
        boolean_ok = false;
        break;
      }
    }
    if (!boolean_ok) {
      ++non_boolean;
      continue;
    }
    if (!inst.phi.eval(mask)) continue;
    std::vector<std::uint8_t> bits(n);
    for (std::size_t j = 0; j < n; ++j) bits[j] = static_cast<std::uint8_t>((mask >> j) & 1u);
    return bits;
  }
  if (!candidates.empty() && non_boolean == candidates.size())
    throw FieldValueNotBoolean("recover: every candidate solved to coefficients outside {0,1}");
  throw NoAssignmentFound("recover: no candidate word yields a verified satisfying assignment");
}

MembershipFn bruteForceMembership(const CnfFormula& phi) {
  return [phi](const FieldCtx& ctx, FieldElement u, FieldElement v) {
    const std::uint64_t limit = std::uint64_t{1} << phi.numVars();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      if (!phi.eval(mask)) continue;
      FieldElement sum = ctx.zero();
      FieldElement power = ctx.one();
      for (int i = 0; i < phi.numVars(); ++i) {
        if ((mask >> i) & 1u) sum = ctx.add(sum, power);
        power = ctx.mul(power, u);
      }
      if (sum == v) return true;
    }
    return false;
  };
}

ReductionFn harnessReduction(std::uint64_t seed, WordSet s, const CnfFormula& phi, Poly2 length_bound,
                             MembershipFn member) {
  if (!member) throw std::invalid_argument("harness: membership oracle required");
  const std::uint64_t phi_hash = phi.hashValue();
  const std::uint64_t n_prime = phi.sizeMeasure();
  return [seed, s = std::move(s), phi_hash, n_prime, length_bound, member = std::move(member)](
             const FieldCtx& ctx, FieldElement u, FieldElement v) {
    const std::uint64_t m = static_cast<std::uint64_t>(ctx.degree());
    const std::uint64_t len_cap = length_bound(n_prime, m);
    const int fresh_len = static_cast<int>(std::min<std::uint64_t>(len_cap, 60));
    if (fresh_len < 1) throw std::invalid_argument("harness: length bound leaves no room for decoy words");

    Word fresh;
    for (std::uint64_t probe = 0;; ++probe) {
      const std::uint64_t h = detail::mix({kTagFresh, seed, phi_hash, m, u.bits, v.bits, probe});
      fresh = Word::fromBits(h & ((std::uint64_t{1} << fresh_len) - 1), fresh_len);
      if (!s.contains(fresh)) break;
    }
    if (!member(ctx, u, v)) return std::vector<Word>{fresh};

    // Member tuple: plant the designated sparse word, a function of
    // (seed, phi, m) only, drawn from the in-bound prefix of S.
    const std::size_t in_bound =
        s.countUpToLength(static_cast<int>(std::min<std::uint64_t>(len_cap, Word::kMaxLength)));
    if (in_bound == 0)
      throw std::invalid_argument("harness: sparse set has no word within the length bound");
    const Word star = s.words()[detail::mix({kTagStar, seed, phi_hash, m}) % in_bound];
    return std::vector<Word>{star, fresh};
  };
}

}  // namespace antihorn
