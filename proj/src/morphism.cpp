#include "ferenczi/morphism.hpp"

#include <algorithm>
#include <set>

namespace ferenczi {

Morphism::Morphism(std::vector<Spacer> domain, std::vector<Spacer> codomain,
                   std::map<Spacer, SymbolWord> images)
    : domain_(sorted_symbols(std::move(domain))),
      codomain_(sorted_symbols(std::move(codomain))),
      images_(std::move(images)) {
  for (Spacer a : domain_) {
    const auto it = images_.find(a);
    if (it == images_.end() || it->second.empty())
      throw DomainError("morphism must be nonerasing (letter " + std::to_string(a) + ")");
    for (Spacer b : it->second)
      if (!std::binary_search(codomain_.begin(), codomain_.end(), b))
        throw DomainError("image letter " + std::to_string(b) + " outside codomain");
  }
}

Morphism Morphism::identity(const std::vector<Spacer>& alphabet) {
  std::map<Spacer, SymbolWord> images;
  for (Spacer a : alphabet) images[a] = {a};
  return Morphism(alphabet, alphabet, std::move(images));
}

const SymbolWord& Morphism::image(Spacer a) const {
  const auto it = images_.find(a);
  if (it == images_.end()) throw DomainError("letter " + std::to_string(a) + " not in domain");
  return it->second;
}

SymbolWord Morphism::apply(const SymbolWord& word) const {
  SymbolWord out;
  for (Spacer a : word) {
    const auto& img = image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

long long Morphism::min_length() const {
  long long m = -1;
  for (Spacer a : domain_) {
    const long long l = static_cast<long long>(image(a).size());
    if (m < 0 || l < m) m = l;
  }
  return m;
}

long long Morphism::max_length() const {
  long long m = 0;
  for (Spacer a : domain_) m = std::max(m, static_cast<long long>(image(a).size()));
  return m;
}

Morphism compose(const Morphism& sigma, const Morphism& tau) {
  if (tau.codomain() != sigma.domain())
    throw DomainError("compose: codomain of inner morphism differs from domain of outer");
  std::map<Spacer, SymbolWord> images;
  for (Spacer a : tau.domain()) images[a] = sigma.apply(tau.image(a));
  return Morphism(tau.domain(), sigma.codomain(), std::move(images));
}

RationalMatrix composition_matrix(const Morphism& tau) {
  RationalMatrix m(tau.codomain(), tau.domain());
  for (Spacer a : tau.domain())
    for (Spacer b : tau.image(a)) m.at(b, a) += 1;
  return m;
}

MorphismPredicates predicates(const Morphism& tau) {
  MorphismPredicates p;
  const auto& dom = tau.domain();
  if (dom.empty()) return p;

  p.constant_length = tau.min_length() == tau.max_length();

  bool same_first = true, same_last = true;
  std::set<Spacer> firsts, lasts;
  for (Spacer a : dom) {
    const auto& img = tau.image(a);
    firsts.insert(img.front());
    lasts.insert(img.back());
    if (img.front() != tau.image(dom.front()).front()) same_first = false;
    if (img.back() != tau.image(dom.front()).back()) same_last = false;
  }
  p.proper = same_first && same_last;
  p.left_permutative = firsts.size() == dom.size();
  p.right_permutative = lasts.size() == dom.size();

  p.positive = true;
  const RationalMatrix m = composition_matrix(tau);
  for (Spacer b : tau.codomain())
    for (Spacer a : dom)
      if (m.at(b, a) == 0) p.positive = false;
  return p;
}

namespace {

bool conjugates_with(const Morphism& left, const Morphism& right, const SymbolWord& w) {
  // left(a) w == w right(a) for all a.
  for (Spacer a : left.domain()) {
    const auto& li = left.image(a);
    const auto& ri = right.image(a);
    if (li.size() != ri.size()) return false;
    SymbolWord lhs = li;
    lhs.insert(lhs.end(), w.begin(), w.end());
    SymbolWord rhs = w;
    rhs.insert(rhs.end(), ri.begin(), ri.end());
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace

std::optional<RotationWitness> rotation_witness(const Morphism& tau, const Morphism& tau_tilde) {
  if (tau.domain() != tau_tilde.domain() || tau.codomain() != tau_tilde.codomain()) return {};
  const long long bound = std::max(tau.max_length(), tau_tilde.max_length());
  const Spacer a0 = tau.domain().front();
  for (long long len = 0; len < bound; ++len) {
    // tau(a) w = w tau~(a) forces w to be the length-len prefix of tau(a) w,
    // hence of tau(a) when len <= |tau(a)|.
    {
      const auto& img = tau.image(a0);
      if (len <= static_cast<long long>(img.size())) {
        SymbolWord w(img.begin(), img.begin() + len);
        if (conjugates_with(tau, tau_tilde, w))
          return RotationWitness{std::move(w), RotationWitness::Direction::Forward};
      }
    }
    {
      const auto& img = tau_tilde.image(a0);
      if (len <= static_cast<long long>(img.size())) {
        SymbolWord w(img.begin(), img.begin() + len);
        if (conjugates_with(tau_tilde, tau, w))
          return RotationWitness{std::move(w), RotationWitness::Direction::Mirrored};
      }
    }
  }
  return {};
}

std::vector<long long> coincidence_indices(const Morphism& tau) {
  const auto preds = predicates(tau);
  if (!preds.constant_length)
    throw DomainError("coincidence_indices requires a constant-length morphism");
  const long long len = tau.max_length();
  std::vector<long long> out;
  for (long long i = 0; i < len; ++i) {
    bool same = true;
    const Spacer first = tau.domain().front();
    for (Spacer a : tau.domain())
      if (tau.image(a)[static_cast<size_t>(i)] != tau.image(first)[static_cast<size_t>(i)])
        same = false;
    if (same) out.push_back(i);
  }
  return out;
}

}  // namespace ferenczi
