#include "deltaknot/rewrite.hpp"

#include "deltaknot/fraction.hpp"

namespace dk {
namespace rewrite {

namespace {

ConwayWord make(std::vector<Entry> v) { return ConwayWord(std::move(v)); }

bool is_unit(Entry a) { return a == 1 || a == -1; }

}  // namespace

std::optional<ConwayWord> merge_zero(const ConwayWord& w, std::size_t i) {
  if (i == 0 || i + 1 >= w.size() || w[i] != 0) return std::nullopt;
  std::vector<Entry> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i) - 1);
  out.push_back(checked_add(w[i - 1], w[i + 1]));
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
  return make(std::move(out));
}

std::optional<ConwayWord> drop_leading_zero(const ConwayWord& w) {
  if (w.size() < 2 || w[0] != 0) return std::nullopt;
  return make(std::vector<Entry>(w.begin() + 2, w.end()));
}

std::optional<ConwayWord> drop_trailing_zero(const ConwayWord& w) {
  if (w.size() < 2 || w.back() != 0) return std::nullopt;
  return make(std::vector<Entry>(w.begin(), w.end() - 2));
}

std::optional<ConwayWord> absorb_trailing_unit(const ConwayWord& w) {
  if (w.size() < 2 || !is_unit(w.back())) return std::nullopt;
  std::vector<Entry> out(w.begin(), w.end() - 1);
  out.back() = checked_add(out.back(), w.back());
  return make(std::move(out));
}

std::optional<ConwayWord> absorb_leading_unit(const ConwayWord& w) {
  if (w.size() < 2 || !is_unit(w.front())) return std::nullopt;
  auto turned = absorb_trailing_unit(reverse(w));
  return reverse(*turned);
}

std::optional<ConwayWord> expand_unit(const ConwayWord& w, std::size_t i) {
  if (i == 0 || i + 1 >= w.size() || !is_unit(w[i])) return std::nullopt;
  const Entry u = w[i];
  std::vector<Entry> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i) - 1);
  out.push_back(checked_add(w[i - 1], u));
  out.push_back(checked_add(-w[i + 1], -u));  // -(y+1) for u=1, 1-y for u=-1
  for (std::size_t k = i + 2; k < w.size(); ++k) out.push_back(-w[k]);
  return make(std::move(out));
}

std::optional<ConwayWord> drop_single_unit(const ConwayWord& w) {
  if (w.size() != 1 || !is_unit(w[0])) return std::nullopt;
  return ConwayWord{};
}

}  // namespace rewrite

ConwayWord normalize(const ConwayWord& word, std::vector<RewriteStep>* trace) {
  ConwayWord w = word;
  auto apply = [&](std::optional<ConwayWord> next, const char* rule) {
    if (!next) return false;
    if (trace) trace->push_back({w, *next, rule});
    w = std::move(*next);
    return true;
  };
  for (;;) {
    bool changed = false;
    for (std::size_t i = 1; i + 1 < w.size() && !changed; ++i) {
      changed = apply(rewrite::merge_zero(w, i), "merge-zero");
    }
    if (changed) continue;
    if (apply(rewrite::drop_leading_zero(w), "drop-leading-zero")) continue;
    if (apply(rewrite::drop_trailing_zero(w), "drop-trailing-zero")) continue;
    if (apply(rewrite::absorb_trailing_unit(w), "absorb-trailing-unit")) continue;
    if (apply(rewrite::absorb_leading_unit(w), "absorb-leading-unit")) continue;
    for (std::size_t i = 1; i + 1 < w.size() && !changed; ++i) {
      changed = apply(rewrite::expand_unit(w, i), "expand-unit");
    }
    if (changed) continue;
    if (apply(rewrite::drop_single_unit(w), "drop-single-unit")) continue;
    return w;
  }
}

}  // namespace dk
