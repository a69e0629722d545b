#ifndef SEMIENDS_MODELS_HPP_
#define SEMIENDS_MODELS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semiends/error.hpp"
#include "semiends/words.hpp"

namespace semiends::models {

using Int = long long;
using Tuple = std::vector<Int>;

struct Element;
using ElementPtr = std::shared_ptr<const Element>;

//! Integer part plus a flag coordinate ({0,1} under real multiplication, or
//! an additive natural-number coordinate).
struct GridElem {
  Tuple ints;
  Int flag;
  bool operator==(const GridElem&) const = default;
};

//! A Rees matrix triple (i, g, lambda) with 0-based indices internally.
struct ReesElem {
  int i;
  Tuple g;
  int lam;
  bool operator==(const ReesElem&) const = default;
};

struct PairElem {
  ElementPtr first;
  ElementPtr second;
  bool operator==(const PairElem& other) const;
};

struct TableElem {
  int idx;
  bool operator==(const TableElem&) const = default;
};

//! A canonical element of some SemigroupSpec. Equality of elements is
//! equality of canonical forms.
struct Element {
  std::variant<words::Word, Tuple, GridElem, ReesElem, PairElem, TableElem> v;
  bool operator==(const Element& other) const { return v == other.v; }
};

Element make_word_elem(words::Word w);
Element make_tuple_elem(Tuple t);
Element make_grid_elem(Tuple ints, Int flag);
Element make_rees_elem(int i, Tuple g, int lam);
Element make_pair_elem(Element first, Element second);
Element make_table_elem(int idx);

//! Ordering convention for canonical serializations: length first, then
//! lexicographic. Fixes deterministic vertex numbering everywhere.
bool canonical_less(const std::string& a, const std::string& b);

//! A closed description of a finitely generated semigroup together with an
//! ordered generating set.
//!
//! Variants:
//!  - presented: elements are normal forms of a shortlex-reducing complete
//!    rewriting system, product is concatenation followed by reduction;
//!  - tuple_monoid: N_0^k or Z^k under componentwise addition;
//!  - grid_flag: Z^k times a flag coordinate, the flag multiplying as a real
//!    number over {0,1} or adding over N_0;
//!  - rees_matrix: triples I x G x Lambda over the group G = Z^d with
//!    (i,g,l)(j,h,m) = (i, g + p[l][j] + h, m);
//!  - product: componentwise product of two specs;
//!  - dual: multiplication reversed;
//!  - finite_table: an explicit multiplication table.
class SemigroupSpec {
 public:
  struct Presented {
    words::RewriteSystem system;
  };
  struct TupleMonoid {
    int dim;
    bool signed_entries;  // false: N_0^k, true: Z^k
    std::vector<Tuple> gens;
  };
  struct GridFlag {
    int dim;
    bool additive_flag;  // false: {0,1} multiplicative, true: N_0 additive
    std::vector<std::pair<Tuple, Int>> gens;
  };
  struct ReesMatrix {
    int group_dim;                      // G = Z^group_dim
    int n;                              // |I|
    int m;                              // |Lambda|
    std::vector<std::vector<Tuple>> p;  // m rows, n columns
    std::vector<Tuple> group_gens;      // must contain the identity tuple
  };
  struct Product {
    std::shared_ptr<const SemigroupSpec> left;
    std::shared_ptr<const SemigroupSpec> right;
  };
  struct Dual {
    std::shared_ptr<const SemigroupSpec> base;
  };
  struct FiniteTable {
    std::vector<std::vector<int>> table;
    std::vector<std::string> names;  // may be empty, defaults to x0, x1, ...
    std::vector<int> gen_indices;    // may be empty, defaults to everything
  };

  using Variant =
      std::variant<Presented, TupleMonoid, GridFlag, ReesMatrix, Product, Dual,
                   FiniteTable>;

  // Factories. Each validates its invariants and computes the generator
  // list, the monoid flag and the generator names.
  static std::shared_ptr<const SemigroupSpec> presented(
      words::RewriteSystem system, bool monoid);
  static std::shared_ptr<const SemigroupSpec> naturals(
      int dim, std::vector<Tuple> gens, bool monoid = true);
  static std::shared_ptr<const SemigroupSpec> lattice(
      int dim, std::vector<Tuple> gens, bool monoid = true);
  static std::shared_ptr<const SemigroupSpec> grid_flag(
      int dim, bool additive_flag, std::vector<std::pair<Tuple, Int>> gens,
      bool monoid = false);
  static std::shared_ptr<const SemigroupSpec> rees_matrix(
      int group_dim, int n, int m, std::vector<std::vector<Tuple>> p,
      std::vector<Tuple> group_gens);
  static std::shared_ptr<const SemigroupSpec> product(
      std::shared_ptr<const SemigroupSpec> left,
      std::shared_ptr<const SemigroupSpec> right);
  static std::shared_ptr<const SemigroupSpec> dual_of(
      std::shared_ptr<const SemigroupSpec> base);
  static std::shared_ptr<const SemigroupSpec> finite_table(
      std::vector<std::vector<int>> table, std::vector<std::string> names = {},
      std::vector<int> gen_indices = {});

  //! A copy of `base` with a replaced generating set. Names default to
  //! the base names for generators kept, fresh letters for new ones.
  static std::shared_ptr<const SemigroupSpec> with_generators(
      const std::shared_ptr<const SemigroupSpec>& base,
      std::vector<Element> gens, std::vector<std::string> names = {});

  const Variant& variant() const noexcept { return variant_; }
  bool is_monoid() const noexcept { return monoid_; }
  const std::vector<Element>& generators() const noexcept { return gens_; }
  const std::vector<std::string>& generator_names() const noexcept {
    return gen_names_;
  }
  //! Alphabet over generator_names(), for parsing ray and base words.
  const words::Alphabet& generator_alphabet() const;

  //! Canonical product. Throws Error on an element/spec mismatch.
  Element multiply(const Element& x, const Element& y) const;

  Element identity() const;  // throws unless is_monoid()

  bool is_idempotent(const Element& x) const;

  //! Canonical serialization of an element.
  std::string format(const Element& x) const;

  //! Evaluate a word over the generator list. Empty words are permitted
  //! only for monoids.
  Element eval_word(const words::Word& w) const;

  //! All x with x * a = v, when a closed form exists for the variant;
  //! std::nullopt means callers must fall back to searching a ball.
  std::optional<std::vector<Element>> right_divide(const Element& v,
                                                   const Element& a) const;
  //! All x with a * x = v, same convention.
  std::optional<std::vector<Element>> left_divide(const Element& v,
                                                  const Element& a) const;

  void check_element(const Element& x) const;  // throws on mismatch

 private:
  SemigroupSpec(Variant v, bool monoid);
  void init_generators();

  Variant variant_;
  bool monoid_;
  std::vector<Element> gens_;
  std::vector<std::string> gen_names_;
  std::shared_ptr<const words::Alphabet> gen_alphabet_;
};

using SpecPtr = std::shared_ptr<const SemigroupSpec>;

//! The spec whose multiply(x, y) equals the original multiply(y, x), with
//! the same generators. Duality is an involution; the dual of a dual is the
//! underlying spec itself.
SpecPtr dual_spec(const SpecPtr& spec);

//! The derived generating set {(i, -p[mu][j] + x, lambda)} of a Rees matrix
//! spec, deduplicated and canonically ordered. This is exactly the
//! generator list the rees_matrix factory installs.
std::vector<Element> rees_generating_set(const SemigroupSpec::ReesMatrix& rm);

}  // namespace semiends::models

#endif  // SEMIENDS_MODELS_HPP_
