#include "solvalg/rewriting.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "solvalg/errors.hpp"

namespace solvalg {

Word monomial_word(const Monomial& m) {
  Word w;
  w.reserve(m.total_degree());
  for (std::size_t i = 0; i < m.size(); ++i) w.insert(w.end(), m[i], static_cast<std::uint32_t>(i));
  return w;
}

namespace {

struct PendingKey {
  Monomial image;
  std::uint64_t inversions;
  Word word;
};

struct PendingLess {
  const MonomialOrdering* ord;
  bool operator()(const PendingKey& a, const PendingKey& b) const {
    const auto c = ord->compare(a.image.exps(), b.image.exps());
    if (c != 0) return c < 0;
    if (a.inversions != b.inversions) return a.inversions < b.inversions;
    return a.word < b.word;
  }
};

PendingKey make_key(Word word, std::size_t nvars) {
  PendingKey key{Monomial(nvars), 0, std::move(word)};
  std::vector<std::uint64_t> seen(nvars, 0);
  for (auto it = key.word.rbegin(); it != key.word.rend(); ++it) {
    const std::uint32_t g = *it;
    for (std::uint32_t s = 0; s < g; ++s) key.inversions += seen[s];
    ++seen[g];
    ++key.image[g];
  }
  return key;
}

}  // namespace

WordRewriter::WordRewriter(AlgebraPresentation presentation, MonomialOrdering ordering,
                           std::uint64_t budget)
    : presentation_(std::move(presentation)), ordering_(std::move(ordering)), budget_(budget) {
  const std::size_t n = presentation_.nvars();
  if (ordering_.nvars() != n) {
    throw DimensionError("ordering on " + std::to_string(ordering_.nvars()) +
                         " generators for a presentation on " + std::to_string(n));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(j, i);
  }
  auto pair_monomial = [n](const std::pair<std::size_t, std::size_t>& p) {
    Monomial m(n);
    ++m[p.first];
    ++m[p.second];
    return m;
  };
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    return ordering_.less(pair_monomial(a), pair_monomial(b));
  });
  pair_rank_.assign(n * n, 0);
  for (std::size_t r = 0; r < pairs.size(); ++r) pair_rank_[pairs[r].first * n + pairs[r].second] = r;
}

std::size_t WordRewriter::choose_pair(const Word& word) const {
  const std::size_t n = presentation_.nvars();
  std::size_t best = word.size();
  for (std::size_t p = 0; p + 1 < word.size(); ++p) {
    if (word[p] <= word[p + 1]) continue;
    if (best == word.size() ||
        pair_rank_[word[p] * n + word[p + 1]] > pair_rank_[word[best] * n + word[best + 1]]) {
      best = p;
    }
  }
  return best;
}

std::vector<WordTerm> WordRewriter::rewrite_at(const Word& word, std::size_t pos,
                                               const Scalar& coeff) const {
  if (pos + 1 >= word.size() || word[pos] <= word[pos + 1]) {
    throw AlgebraError("rewrite_at: no out-of-order pair at the requested position");
  }
  const std::size_t j = word[pos];
  const std::size_t i = word[pos + 1];
  const Relation& rel = presentation_.relation(j, i);

  std::vector<WordTerm> out;
  out.reserve(1 + rel.tail.size());
  Word swapped = word;
  std::swap(swapped[pos], swapped[pos + 1]);
  out.push_back({std::move(swapped), coeff * rel.lambda});

  for (const auto& [m, c] : rel.tail.terms()) {
    Word w;
    w.reserve(word.size() + m.total_degree());
    w.insert(w.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos));
    const Word mid = monomial_word(m);
    w.insert(w.end(), mid.begin(), mid.end());
    w.insert(w.end(), word.begin() + static_cast<std::ptrdiff_t>(pos + 2), word.end());
    out.push_back({std::move(w), coeff * c});
  }
  return out;
}

Polynomial WordRewriter::normalize(const std::vector<WordTerm>& terms,
                                   std::uint64_t* steps_out) const {
  const std::size_t n = presentation_.nvars();
  Polynomial out(n, presentation_.field());
  std::map<PendingKey, Scalar, PendingLess> pending(PendingLess{&ordering_});

  auto push = [&](Word word, const Scalar& c) {
    if (c.is_zero()) return;
    for (std::uint32_t g : word) {
      if (g >= n) throw DimensionError("word mentions generator index " + std::to_string(g));
    }
    PendingKey key = make_key(std::move(word), n);
    if (key.inversions == 0) {
      out.add_term(key.image, c);
      return;
    }
    auto [it, inserted] = pending.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };

  for (const auto& t : terms) push(t.word, t.coeff);

  std::uint64_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    if (++steps > budget_) {
      if (steps_out) *steps_out = steps;
      throw BudgetExceededError(budget_);
    }
    const Word& word = node.key().word;
    for (auto& t : rewrite_at(word, choose_pair(word), node.mapped())) {
      push(std::move(t.word), t.coeff);
    }
  }
  if (steps_out) *steps_out = steps;
  return out;
}

}  // namespace solvalg
