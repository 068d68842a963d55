#include "weyl/order.hpp"

#include <algorithm>
#include <numeric>

namespace weyl {

MonomialOrder::MonomialOrder(OrderBase base, int n, int l, ModuleMode mode,
                             std::vector<int> precedence,
                             std::vector<int> positions_desc)
    : base_(base),
      mode_(mode),
      n_(n),
      l_(l),
      precedence_(std::move(precedence)),
      positions_desc_(std::move(positions_desc)) {
  if (precedence_.empty()) {
    precedence_.resize(2 * n_);
    std::iota(precedence_.begin(), precedence_.end(), 0);
  }
  if (positions_desc_.empty()) {
    positions_desc_.resize(l_);
    std::iota(positions_desc_.begin(), positions_desc_.end(), 0);
  }
  if (static_cast<int>(precedence_.size()) != 2 * n_)
    throw AmbientError("MonomialOrder: precedence must list all 2n variables");
  if (static_cast<int>(positions_desc_.size()) != l_)
    throw AmbientError("MonomialOrder: position list must cover 1..l");
  std::vector<char> seen(2 * n_, 0);
  for (int v : precedence_) {
    if (v < 0 || v >= 2 * n_ || seen[v])
      throw AmbientError("MonomialOrder: precedence is not a permutation");
    seen[v] = 1;
  }
  pos_rank_.assign(l_, -1);
  for (int r = 0; r < l_; ++r) {
    int p = positions_desc_[r];
    if (p < 0 || p >= l_ || pos_rank_[p] != -1)
      throw AmbientError("MonomialOrder: positions are not a permutation");
    pos_rank_[p] = l_ - r;  // earlier in the list = greater
  }
}

MonomialOrder MonomialOrder::induced() const {
  MonomialOrder o = *this;
  o.induced_ = true;
  return o;
}

MonomialOrder MonomialOrder::with_module_mode(ModuleMode m) const {
  MonomialOrder o(base_, n_, l_, m, precedence_, positions_desc_);
  o.induced_ = induced_;
  return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a,
                                            const Monomial& b) const {
  auto exponent = [this](const Monomial& m, int var) {
    return var < n_ ? m.x[var] : m.d[var - n_];
  };

  auto term_part = [&]() -> std::strong_ordering {
    long da = a.x.sum() + a.d.sum();
    long db = b.x.sum() + b.d.sum();
    if (auto c = da <=> db; c != 0) return c;
    if (base_ == OrderBase::deglex) {
      // most significant variable first, larger exponent wins
      for (int r = 2 * n_ - 1; r >= 0; --r) {
        int v = precedence_[r];
        if (auto c = exponent(a, v) <=> exponent(b, v); c != 0) return c;
      }
    } else {
      // least significant variable first, smaller exponent wins
      for (int r = 0; r < 2 * n_; ++r) {
        int v = precedence_[r];
        if (auto c = exponent(b, v) <=> exponent(a, v); c != 0) return c;
      }
    }
    return std::strong_ordering::equal;
  };

  if (mode_ == ModuleMode::pot)
    if (auto c = pos_rank_[a.pos] <=> pos_rank_[b.pos]; c != 0) return c;
  if (auto c = term_part(); c != 0) return c;
  if (mode_ == ModuleMode::top)
    if (auto c = pos_rank_[a.pos] <=> pos_rank_[b.pos]; c != 0) return c;
  return a.x0 <=> b.x0;  // the homogenizing variable is least
}

std::optional<Term> hdt(const Element& f, const MonomialOrder& order) {
  if (f.is_zero()) return std::nullopt;
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.compare(best->monomial, t.monomial) < 0) best = &t;
  return *best;
}

bool element_less(const Element& f1, const Element& f2,
                  const MonomialOrder& order) {
  auto h1 = hdt(f1, order), h2 = hdt(f2, order);
  if (!h1) return static_cast<bool>(h2);  // o(0) is least
  if (!h2) return false;
  return order.compare(h1->monomial, h2->monomial) < 0;
}

}  // namespace weyl
