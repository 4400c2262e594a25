#pragma once

#include "ferenczi/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ferenczi {

using SymbolWord = std::vector<Spacer>;

/// Nonerasing free-monoid morphism between finite alphabets of spacer
/// symbols. Images are nonempty words over the codomain.
class Morphism {
 public:
  Morphism(std::vector<Spacer> domain, std::vector<Spacer> codomain,
           std::map<Spacer, SymbolWord> images);

  static Morphism identity(const std::vector<Spacer>& alphabet);

  const std::vector<Spacer>& domain() const { return domain_; }
  const std::vector<Spacer>& codomain() const { return codomain_; }
  const SymbolWord& image(Spacer a) const;

  SymbolWord apply(const SymbolWord& word) const;

  /// <tau> and |tau|: minimum and maximum image length.
  long long min_length() const;
  long long max_length() const;

  bool operator==(const Morphism&) const = default;

 private:
  std::vector<Spacer> domain_, codomain_;
  std::map<Spacer, SymbolWord> images_;
};

struct MorphismPredicates {
  bool proper = false;
  bool constant_length = false;
  bool left_permutative = false;
  bool right_permutative = false;
  bool positive = false;
};

/// Conjugating word for tau(a) w = w tau~(a) (direction = Forward) or the
/// mirrored identity (direction = Mirrored).
struct RotationWitness {
  SymbolWord word;
  enum class Direction { Forward, Mirrored } direction = Direction::Forward;
};

/// sigma o tau, defined when codomain(tau) == domain(sigma).
Morphism compose(const Morphism& sigma, const Morphism& tau);

/// M_tau(b, a) = |tau(a)|_b, rows = codomain, columns = domain.
RationalMatrix composition_matrix(const Morphism& tau);

MorphismPredicates predicates(const Morphism& tau);

/// Searches |w| < max image length exhaustively for a rotation conjugacy
/// between tau and tau~.
std::optional<RotationWitness> rotation_witness(const Morphism& tau, const Morphism& tau_tilde);

/// Indices i with tau(a)_i independent of a. Requires constant length.
std::vector<long long> coincidence_indices(const Morphism& tau);

}  // namespace ferenczi
