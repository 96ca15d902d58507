#include "antihorn/world.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "hashing.hpp"

namespace antihorn {

namespace {

using detail::draw;
using detail::mix;

// Tag bytes keep the per-purpose hash streams disjoint.
enum : std::uint64_t { kTagSet = 1, kTagCount = 2, kTagLhs = 3, kTagArity = 4, kTagRhs = 5 };

// Keeping generated left-hand words short bounds how many distinct learner
// targets a world produces; right-hand words still use the full q(|x|) range.
constexpr int kLhsLengthCap = 6;
constexpr std::uint64_t kClausesPerInputCap = 6;

WordSet generateSparseSet(const WorldParams& p, int length_cap) {
  std::vector<Word> words;
  std::uint64_t cum = 0;
  for (int len = 0; len <= length_cap; ++len) {
    // Fill the census budget at this length to the requested density.
    const std::uint64_t budget = p.density.num * p.census(static_cast<std::uint64_t>(len)) / p.density.den;
    const std::uint64_t avail = std::uint64_t{1} << len;
    std::uint64_t need = budget > cum ? budget - cum : 0;
    need = std::min(need, avail);
    std::vector<std::uint64_t> taken;
    for (std::uint64_t t = 0; t < need; ++t) {
      std::uint64_t bits = draw(mix({p.seed, kTagSet, static_cast<std::uint64_t>(len), t}), avail);
      while (std::find(taken.begin(), taken.end(), bits) != taken.end()) bits = (bits + 1) % avail;
      taken.push_back(bits);
      words.push_back(Word::fromBits(bits, len));
    }
    cum += need;
  }
  return WordSet(std::move(words));
}

// Words in S short enough for the current bound, as a contiguous prefix of
// the sorted set.
std::span<const Word> sparsePrefix(const WordSet& s, int max_len) {
  std::span<const Word> all = s.words();
  return all.subspan(0, s.countUpToLength(max_len));
}

Word drawWord(std::uint64_t h, int max_len, std::span<const Word> from_s) {
  if ((h & 1) == 0 && !from_s.empty())
    return from_s[draw(h >> 1, from_s.size())];
  return Word::fromRank(draw(h >> 1, Word::countUpToLength(max_len)));
}

std::vector<AntiHornFormula> generateTable(const WorldParams& p, const WordSet& s) {
  const std::uint64_t total = Word::countUpToLength(p.n_max);
  std::vector<AntiHornFormula> table;
  table.reserve(total);
  for (std::uint64_t r = 0; r < total; ++r) {
    const Word x = Word::fromRank(r);
    const int len_cap = static_cast<int>(p.bound(static_cast<std::uint64_t>(x.size())));
    const std::uint64_t n_clauses =
        draw(mix({p.seed, kTagCount, r}), std::min<std::uint64_t>(static_cast<std::uint64_t>(len_cap), kClausesPerInputCap) + 1);
    const auto s_lhs = sparsePrefix(s, std::min(len_cap, kLhsLengthCap));
    const auto s_rhs = sparsePrefix(s, len_cap);
    std::vector<AntiHornClause> clauses;
    clauses.reserve(n_clauses);
    for (std::uint64_t j = 0; j < n_clauses; ++j) {
      const Word lhs = drawWord(mix({p.seed, kTagLhs, r, j}), std::min(len_cap, kLhsLengthCap), s_lhs);
      const std::uint64_t arity = draw(mix({p.seed, kTagArity, r, j}), static_cast<std::uint64_t>(p.k) + 1);
      std::vector<Word> rhs;
      rhs.reserve(arity);
      for (std::uint64_t t = 0; t < arity; ++t)
        rhs.push_back(drawWord(mix({p.seed, kTagRhs, r, j, t}), len_cap, s_rhs));
      clauses.emplace_back(lhs, std::move(rhs));
    }
    table.emplace_back(std::move(clauses));
  }
  return table;
}

}  // namespace

int SparseWorld::sparseLengthCap() const {
  return static_cast<int>(params_.bound(static_cast<std::uint64_t>(params_.n_max)));
}

void SparseWorld::validate() const {
  const WorldParams& p = params_;
  if (p.k < 1) throw std::invalid_argument("world: k must be at least 1");
  if (p.n_max < 1 || p.n_max > kMaxHorizon)
    throw std::invalid_argument("world: n_max outside [1, " + std::to_string(kMaxHorizon) + "]");
  if (p.density.den == 0 || p.density.num > p.density.den)
    throw std::invalid_argument("world: density must be a rational in [0, 1]");
  const int length_cap = sparseLengthCap();
  if (length_cap > 60) throw std::invalid_argument("world: q(n_max) above the 60-bit word budget");
  if (!p.census.exceedsOneUpTo(static_cast<std::uint64_t>(length_cap)))
    throw std::invalid_argument("world: census polynomial must exceed 1 everywhere");
  // Census: at every length the sparse set stays within p.
  for (int len = 0; len <= length_cap; ++len) {
    const std::uint64_t have = s_.countUpToLength(len);
    const std::uint64_t cap = p.census(static_cast<std::uint64_t>(len));
    if (have > cap)
      throw std::runtime_error("world: census bound violated at length " + std::to_string(len) +
                               " (" + std::to_string(have) + " words, bound " + std::to_string(cap) + ")");
  }
  if (s_.maxLength() > length_cap)
    throw std::runtime_error("world: sparse set contains a word longer than q(n_max)");
  // Reduction bounds: clause count, word lengths, right-hand arity.
  if (table_.size() != Word::countUpToLength(p.n_max))
    throw std::runtime_error("world: reduction table does not cover every |x| <= n_max");
  for (std::uint64_t r = 0; r < table_.size(); ++r) {
    const Word x = Word::fromRank(r);
    const std::uint64_t cap = p.bound(static_cast<std::uint64_t>(x.size()));
    const AntiHornFormula& f = table_[r];
    if (f.size() > cap)
      throw std::runtime_error("world: reduction of \"" + x.str() + "\" has more than q(|x|) clauses");
    for (const AntiHornClause& c : f) {
      if (c.rhsSize() > static_cast<std::size_t>(p.k))
        throw std::runtime_error("world: reduction of \"" + x.str() + "\" breaks the arity bound k");
      if (static_cast<std::uint64_t>(c.lhs().size()) > cap)
        throw std::runtime_error("world: reduction of \"" + x.str() + "\" uses a word longer than q(|x|)");
      for (const Word& w : c.rhs())
        if (static_cast<std::uint64_t>(w.size()) > cap)
          throw std::runtime_error("world: reduction of \"" + x.str() + "\" uses a word longer than q(|x|)");
    }
  }
}

SparseWorld SparseWorld::generate(const WorldParams& params) {
  SparseWorld w;
  w.params_ = params;
  if (params.k < 1) throw std::invalid_argument("world: k must be at least 1");
  if (params.n_max < 1 || params.n_max > kMaxHorizon)
    throw std::invalid_argument("world: n_max outside [1, " + std::to_string(kMaxHorizon) + "]");
  if (params.density.den == 0 || params.density.num > params.density.den)
    throw std::invalid_argument("world: density must be a rational in [0, 1]");
  const int length_cap = w.sparseLengthCap();
  if (length_cap > 60) throw std::invalid_argument("world: q(n_max) above the 60-bit word budget");
  if (!params.census.exceedsOneUpTo(static_cast<std::uint64_t>(length_cap)))
    throw std::invalid_argument("world: census polynomial must exceed 1 everywhere");
  w.s_ = generateSparseSet(params, length_cap);
  w.table_ = generateTable(params, w.s_);
  w.validate();
  return w;
}

SparseWorld SparseWorld::fromParts(const WorldParams& params, WordSet s,
                                   std::vector<AntiHornFormula> table) {
  SparseWorld w;
  w.params_ = params;
  w.s_ = std::move(s);
  w.table_ = std::move(table);
  w.explicit_table_ = true;
  w.validate();
  return w;
}

const AntiHornFormula& SparseWorld::reduction(const Word& x) const {
  if (x.size() > params_.n_max)
    throw std::out_of_range("world: reduction queried beyond n_max");
  return table_[x.rank()];
}

std::string SparseWorld::save() const {
  nlohmann::json j;
  j["format"] = "sparse-world/1";
  j["seed"] = params_.seed;
  j["k"] = params_.k;
  j["n_max"] = params_.n_max;
  j["census"] = std::vector<std::uint64_t>(params_.census.coefficients().begin(),
                                           params_.census.coefficients().end());
  j["bound"] = std::vector<std::uint64_t>(params_.bound.coefficients().begin(),
                                          params_.bound.coefficients().end());
  j["density"] = params_.density.str();
  std::vector<std::string> set_words;
  set_words.reserve(s_.size());
  for (const Word& w : s_) set_words.push_back(w.str());
  j["sparse_set"] = set_words;
  if (explicit_table_) {
    nlohmann::json red = nlohmann::json::object();
    for (std::uint64_t r = 0; r < table_.size(); ++r)
      red[Word::fromRank(r).str()] = table_[r].str();
    j["reduction"] = std::move(red);
  }
  return j.dump(2) + "\n";
}

SparseWorld SparseWorld::load(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("world: scenario is not valid JSON: ") + e.what());
  }
  if (j.value("format", "") != std::string("sparse-world/1"))
    throw std::runtime_error("world: unrecognized scenario format");
  SparseWorld w;
  try {
    w.params_.seed = j.at("seed").get<std::uint64_t>();
    w.params_.k = j.at("k").get<int>();
    w.params_.n_max = j.at("n_max").get<int>();
    w.params_.census = Poly(j.at("census").get<std::vector<std::uint64_t>>());
    w.params_.bound = Poly(j.at("bound").get<std::vector<std::uint64_t>>());
    w.params_.density = Rational::parse(j.at("density").get<std::string>());
    std::vector<Word> words;
    for (const auto& s : j.at("sparse_set").get<std::vector<std::string>>())
      words.push_back(Word::parse(s));
    w.s_ = WordSet(std::move(words));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("world: malformed scenario field: ") + e.what());
  }
  if (w.params_.n_max < 1 || w.params_.n_max > kMaxHorizon)
    throw std::invalid_argument("world: n_max outside [1, " + std::to_string(kMaxHorizon) + "]");
  if (!w.params_.census.exceedsOneUpTo(0))
    throw std::invalid_argument("world: census polynomial must exceed 1 everywhere");
  w.table_ = generateTable(w.params_, w.s_);
  if (j.contains("reduction")) {
    // Explicit entries override the generator; absent inputs keep theirs.
    w.explicit_table_ = true;
    for (const auto& [key, value] : j.at("reduction").items()) {
      const Word x = Word::parse(key);
      if (x.size() > w.params_.n_max)
        throw std::runtime_error("world: reduction override for a word beyond n_max");
      w.table_[x.rank()] = AntiHornFormula::parse(value.get<std::string>());
    }
  }
  w.validate();
  return w;
}

TargetLanguage::TargetLanguage(const SparseWorld& world) : world_(&world) {
  const std::uint64_t total = Word::countUpToLength(world.nMax());
  members_.resize(total);
  for (std::uint64_t r = 0; r < total; ++r)
    members_[r] = satisfied(world.reduction(Word::fromRank(r)), world.sparseSet());
}

bool TargetLanguage::contains(const Word& x) const {
  if (x.size() > world_->nMax())
    throw std::out_of_range("target: membership queried beyond n_max");
  return members_[x.rank()];
}

std::optional<Word> smallestCounterexampleA(const TargetLanguage& target, int n,
                                            const AntiHornFormula& gamma) {
  if (n < 0 || n > target.world().nMax())
    throw std::out_of_range("counterexample scan beyond n_max");
  const std::uint64_t total = Word::countUpToLength(n);
  for (std::uint64_t r = 0; r < total; ++r) {
    const Word x = Word::fromRank(r);
    if (!target.contains(x)) continue;
    if (!derives(gamma, target.world().reduction(x))) return x;
  }
  return std::nullopt;
}

std::optional<Word> smallestCounterexampleB(const TargetLanguage& target, int n,
                                            std::span<const AntiHornFormula> list) {
  if (n < 0 || n > target.world().nMax())
    throw std::out_of_range("counterexample scan beyond n_max");
  const std::uint64_t total = Word::countUpToLength(n);
  for (std::uint64_t r = 0; r < total; ++r) {
    const Word x = Word::fromRank(r);
    if (target.contains(x)) continue;
    const AntiHornFormula& phi = target.world().reduction(x);
    bool all = true;
    for (const AntiHornFormula& g : list) {
      if (!derives(g, phi)) {
        all = false;
        break;
      }
    }
    if (all) return x;
  }
  return std::nullopt;
}

}  // namespace antihorn
