#include "dehn/growth.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dehn {

Config Config::from_env() {
  Config cfg;
  if (const char* v = std::getenv("DEHN_WORD_BUDGET")) cfg.word_budget = std::stoull(v);
  if (const char* v = std::getenv("DEHN_MAX_DEPTH")) cfg.max_level_depth = std::stoi(v);
  if (const char* v = std::getenv("DEHN_W_INDEX_CAP")) cfg.w_index_cap = std::stoull(v);
  if (const char* v = std::getenv("DEHN_EXPLICIT_R_CAP")) {
    cfg.explicit_caps["G0"] = std::stoi(v);
    cfg.explicit_caps["H1"] = std::stoi(v);
  }
  return cfg;
}

Substitution::Substitution(std::vector<int> image1, std::vector<int> image2)
    : image1_(std::move(image1)), image2_(std::move(image2)) {
  stretch_ = std::max(image1_.size(), image2_.size());
}

const Substitution& Substitution::phi() {
  static const Substitution s({1, 2, 1}, {1});
  return s;
}

const Substitution& Substitution::phi_inverse() {
  static const Substitution s({2}, {-2, 1, -2});
  return s;
}

Word Substitution::image_of(const Generator& g) const {
  if (g.family == Family::Diag && g.ucoord != g.coord)
    throw std::domain_error(
        "substitution is undefined on mixed diagonal letters");
  const std::vector<int>& img = (g.coord == 1) ? image1_ : image2_;
  std::vector<Generator> letters;
  letters.reserve(img.size());
  auto letter_at = [&g](int coord_signed) {
    Generator h = g;
    h.coord = static_cast<std::int8_t>(coord_signed < 0 ? -coord_signed : coord_signed);
    if (g.family == Family::Diag) h.ucoord = h.coord;
    h.sign = static_cast<std::int8_t>(coord_signed < 0 ? -1 : 1);
    return h;
  };
  if (g.sign > 0) {
    for (int c : img) letters.push_back(letter_at(c));
  } else {
    for (auto it = img.rbegin(); it != img.rend(); ++it)
      letters.push_back(letter_at(*it).inverse());
  }
  return Word(std::move(letters));
}

Word Substitution::apply(const Word& w) const {
  std::vector<Generator> out;
  out.reserve(w.size() * stretch_);
  for (const auto& g : w.letters()) {
    Word img = image_of(g);
    for (const auto& h : img.letters()) out.push_back(h);
  }
  return Word(std::move(out));
}

namespace {

Word apply_iterated(const Substitution& s, const Word& w, int times,
                    const Config& cfg) {
  if (times < 0) throw IndexOutOfRange("iteration count must be >= 0");
  // |s^t(w)| <= |w| * L(t) for phi; the same bound holds for phi^-1 since
  // both stretch letters by at most 3.
  BigInt estimate = BigInt(w.size()) * GrowthTable::instance().phi_length(times);
  if (estimate > BigInt(cfg.word_budget))
    throw BudgetExceeded("estimated length " + estimate.to_string() +
                         " exceeds word budget " + std::to_string(cfg.word_budget));
  Word out = w;
  for (int i = 0; i < times; ++i) out = s.apply(out);
  return out;
}

}  // namespace

Word apply_phi(const Word& w, int times, const Config& cfg) {
  return apply_iterated(Substitution::phi(), w, times, cfg);
}

Word apply_phi_inverse(const Word& w, int times, const Config& cfg) {
  return apply_iterated(Substitution::phi_inverse(), w, times, cfg);
}

GrowthTable& GrowthTable::instance() {
  static GrowthTable table;
  return table;
}

void GrowthTable::extend(std::uint64_t n) {
  if (lengths_.empty()) {
    lengths_ = {BigInt(1), BigInt(3)};
    sums_ = {BigInt(1), BigInt(4)};
  }
  while (lengths_.size() <= n) {
    std::size_t k = lengths_.size();
    BigInt next = lengths_[k - 1] + lengths_[k - 1] + lengths_[k - 2];
    sums_.push_back(sums_.back() + next);
    lengths_.push_back(std::move(next));
  }
}

BigInt GrowthTable::phi_length(std::uint64_t n) {
  std::lock_guard<std::mutex> lock(mu_);
  extend(n);
  return lengths_[n];
}

BigInt GrowthTable::phi_length_big(const BigInt& n, const Config& cfg) {
  if (n > BigInt(cfg.w_index_cap))
    throw BudgetExceeded("length index " + n.to_string() +
                         " exceeds the recurrence cap " +
                         std::to_string(cfg.w_index_cap));
  return phi_length(n.to_u64());
}

BigInt GrowthTable::w(int n, std::uint64_t r, const Config& cfg) {
  if (n < 0) throw IndexOutOfRange("w wants n >= 0");
  if (r < 1) throw IndexOutOfRange("w wants r >= 1");
  // No separate memo: each step is a cached-table lookup, and budgets are
  // re-validated on every call.
  BigInt value(r);
  for (int i = 1; i <= n; ++i) value = phi_length_big(value, cfg);
  return value;
}

BigInt GrowthTable::geometric_sum(std::uint64_t n) {
  std::lock_guard<std::mutex> lock(mu_);
  extend(n);
  return sums_[n];
}

BigInt phi_length(std::uint64_t n) { return GrowthTable::instance().phi_length(n); }

BigInt w_growth(int n, std::uint64_t r, const Config& cfg) {
  return GrowthTable::instance().w(n, r, cfg);
}

BigInt geometric_sum(std::uint64_t n) {
  return GrowthTable::instance().geometric_sum(n);
}

}  // namespace dehn
