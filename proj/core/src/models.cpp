#include "semiends/models.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace semiends::models {

namespace {

std::string format_tuple(const Tuple& t) {
  if (t.size() == 1) {
    return std::to_string(t[0]);
  }
  std::string out = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(t[i]);
  }
  out += ')';
  return out;
}

Tuple add_tuples(const Tuple& a, const Tuple& b) {
  Tuple out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + b[i];
  }
  return out;
}

Tuple sub_tuples(const Tuple& a, const Tuple& b) {
  Tuple out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] - b[i];
  }
  return out;
}

bool all_nonneg(const Tuple& t) {
  return std::all_of(t.begin(), t.end(), [](Int x) { return x >= 0; });
}

std::vector<std::string> default_names(size_t k) {
  std::vector<std::string> names;
  names.reserve(k);
  if (k <= 26) {
    for (size_t i = 0; i < k; ++i) {
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    }
  } else {
    for (size_t i = 0; i < k; ++i) {
      names.push_back("g" + std::to_string(i));
    }
  }
  return names;
}

}  // namespace

bool PairElem::operator==(const PairElem& other) const {
  return *first == *other.first && *second == *other.second;
}

Element make_word_elem(words::Word w) { return Element{std::move(w)}; }
Element make_tuple_elem(Tuple t) { return Element{std::move(t)}; }
Element make_grid_elem(Tuple ints, Int flag) {
  return Element{GridElem{std::move(ints), flag}};
}
Element make_rees_elem(int i, Tuple g, int lam) {
  return Element{ReesElem{i, std::move(g), lam}};
}
Element make_pair_elem(Element first, Element second) {
  return Element{PairElem{std::make_shared<const Element>(std::move(first)),
                          std::make_shared<const Element>(std::move(second))}};
}
Element make_table_elem(int idx) { return Element{TableElem{idx}}; }

bool canonical_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

SemigroupSpec::SemigroupSpec(Variant v, bool monoid)
    : variant_(std::move(v)), monoid_(monoid) {}

const words::Alphabet& SemigroupSpec::generator_alphabet() const {
  return *gen_alphabet_;
}

void SemigroupSpec::init_generators() {
  if (std::holds_alternative<Presented>(variant_)) {
    const auto& alph = std::get<Presented>(variant_).system.alphabet();
    for (words::Letter x = 0; x < alph.size(); ++x) {
      gens_.push_back(make_word_elem(words::Word{x}));
    }
    gen_names_ = alph.names();
  } else if (auto* tm = std::get_if<TupleMonoid>(&variant_)) {
    for (const auto& g : tm->gens) {
      gens_.push_back(make_tuple_elem(g));
    }
    gen_names_ = default_names(gens_.size());
  } else if (auto* gf = std::get_if<GridFlag>(&variant_)) {
    for (const auto& [t, f] : gf->gens) {
      gens_.push_back(make_grid_elem(t, f));
    }
    gen_names_ = default_names(gens_.size());
  } else if (auto* rm = std::get_if<ReesMatrix>(&variant_)) {
    gens_ = rees_generating_set(*rm);
    gen_names_ = default_names(gens_.size());
  } else if (auto* pr = std::get_if<Product>(&variant_)) {
    for (const auto& l : pr->left->generators()) {
      for (const auto& r : pr->right->generators()) {
        gens_.push_back(make_pair_elem(l, r));
      }
    }
    gen_names_ = default_names(gens_.size());
  } else if (auto* du = std::get_if<Dual>(&variant_)) {
    gens_ = du->base->generators();
    gen_names_ = du->base->generator_names();
  } else if (auto* ft = std::get_if<FiniteTable>(&variant_)) {
    for (int idx : ft->gen_indices) {
      gens_.push_back(make_table_elem(idx));
      gen_names_.push_back(ft->names[idx]);
    }
  }
  if (gens_.empty()) {
    throw Error("SemigroupSpec: generating set is empty");
  }
  gen_alphabet_ = std::make_shared<const words::Alphabet>(gen_names_);
}

SpecPtr SemigroupSpec::presented(words::RewriteSystem system, bool monoid) {
  auto spec = std::shared_ptr<SemigroupSpec>(
      new SemigroupSpec(Variant(Presented{std::move(system)}), monoid));
  spec->init_generators();
  return spec;
}

SpecPtr SemigroupSpec::naturals(int dim, std::vector<Tuple> gens, bool monoid) {
  if (dim < 1) {
    throw Error("naturals: dimension must be positive");
  }
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != dim) {
      throw Error("naturals: generator of wrong dimension");
    }
    if (!all_nonneg(g)) {
      throw Error("naturals: generators must have non-negative entries");
    }
  }
  auto spec = std::shared_ptr<SemigroupSpec>(new SemigroupSpec(
      Variant(TupleMonoid{dim, false, std::move(gens)}), monoid));
  spec->init_generators();
  return spec;
}

SpecPtr SemigroupSpec::lattice(int dim, std::vector<Tuple> gens, bool monoid) {
  if (dim < 1) {
    throw Error("lattice: dimension must be positive");
  }
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != dim) {
      throw Error("lattice: generator of wrong dimension");
    }
  }
  auto spec = std::shared_ptr<SemigroupSpec>(new SemigroupSpec(
      Variant(TupleMonoid{dim, true, std::move(gens)}), monoid));
  spec->init_generators();
  return spec;
}

SpecPtr SemigroupSpec::grid_flag(int dim, bool additive_flag,
                                 std::vector<std::pair<Tuple, Int>> gens,
                                 bool monoid) {
  if (dim < 1) {
    throw Error("grid_flag: dimension must be positive");
  }
  for (const auto& [t, f] : gens) {
    if (static_cast<int>(t.size()) != dim) {
      throw Error("grid_flag: generator of wrong dimension");
    }
    if (additive_flag ? f < 0 : (f != 0 && f != 1)) {
      throw Error("grid_flag: invalid flag value " + std::to_string(f));
    }
  }
  auto spec = std::shared_ptr<SemigroupSpec>(new SemigroupSpec(
      Variant(GridFlag{dim, additive_flag, std::move(gens)}), monoid));
  spec->init_generators();
  return spec;
}

SpecPtr SemigroupSpec::rees_matrix(int group_dim, int n, int m,
                                   std::vector<std::vector<Tuple>> p,
                                   std::vector<Tuple> group_gens) {
  if (group_dim < 1 || n < 1 || m < 1) {
    throw Error("rees_matrix: dimensions must be positive");
  }
  if (static_cast<int>(p.size()) != m) {
    throw Error("rees_matrix: sandwich matrix must have m rows");
  }
  for (const auto& row : p) {
    if (static_cast<int>(row.size()) != n) {
      throw Error("rees_matrix: sandwich matrix row must have n entries");
    }
    for (const auto& e : row) {
      if (static_cast<int>(e.size()) != group_dim) {
        throw Error("rees_matrix: sandwich entry of wrong dimension");
      }
    }
  }
  Tuple zero(group_dim, 0);
  if (std::find(group_gens.begin(), group_gens.end(), zero) ==
      group_gens.end()) {
    throw Error(
        "rees_matrix: group generating set must contain the identity");
  }
  for (const auto& g : group_gens) {
    if (static_cast<int>(g.size()) != group_dim) {
      throw Error("rees_matrix: group generator of wrong dimension");
    }
  }
  auto spec = std::shared_ptr<SemigroupSpec>(new SemigroupSpec(
      Variant(ReesMatrix{group_dim, n, m, std::move(p), std::move(group_gens)}),
      false));
  spec->init_generators();
  return spec;
}

SpecPtr SemigroupSpec::product(SpecPtr left, SpecPtr right) {
  bool monoid = left->is_monoid() && right->is_monoid();
  auto spec = std::shared_ptr<SemigroupSpec>(new SemigroupSpec(
      Variant(Product{std::move(left), std::move(right)}), monoid));
  spec->init_generators();
  return spec;
}

SpecPtr SemigroupSpec::finite_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> names,
                                    std::vector<int> gen_indices) {
  const int n = static_cast<int>(table.size());
  if (n == 0) {
    throw Error("finite_table: table must be non-empty");
  }
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) {
      throw Error("finite_table: table must be square");
    }
    for (int e : row) {
      if (e < 0 || e >= n) {
        throw Error("finite_table: entry out of range");
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (table[table[x][y]][z] != table[x][table[y][z]]) {
          throw Error("finite_table: not associative at (" +
                      std::to_string(x) + "," + std::to_string(y) + "," +
                      std::to_string(z) + ")");
        }
      }
    }
  }
  if (names.empty()) {
    for (int i = 0; i < n; ++i) {
      names.push_back("x" + std::to_string(i));
    }
  } else if (static_cast<int>(names.size()) != n) {
    throw Error("finite_table: names must match table size");
  }
  if (gen_indices.empty()) {
    for (int i = 0; i < n; ++i) {
      gen_indices.push_back(i);
    }
  }
  for (int g : gen_indices) {
    if (g < 0 || g >= n) {
      throw Error("finite_table: generator index out of range");
    }
  }
  // Exact closure check: the listed generators must generate everything.
  std::set<int> closed(gen_indices.begin(), gen_indices.end());
  std::vector<int> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int g : gen_indices) {
        int y = table[x][g];
        if (closed.insert(y).second) {
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  if (static_cast<int>(closed.size()) != n) {
    throw Error("finite_table: generators do not generate the semigroup");
  }
  // Detect a two-sided identity.
  bool monoid = false;
  for (int e = 0; e < n && !monoid; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = table[e][x] == x && table[x][e] == x;
    }
    monoid = ok;
  }
  auto spec = std::shared_ptr<SemigroupSpec>(new SemigroupSpec(
      Variant(FiniteTable{std::move(table), std::move(names),
                          std::move(gen_indices)}),
      monoid));
  spec->init_generators();
  return spec;
}

SpecPtr SemigroupSpec::with_generators(const SpecPtr& base,
                                       std::vector<Element> gens,
                                       std::vector<std::string> names) {
  auto spec = std::shared_ptr<SemigroupSpec>(
      new SemigroupSpec(base->variant_, base->monoid_));
  for (const auto& g : gens) {
    base->check_element(g);
  }
  if (gens.empty()) {
    throw Error("with_generators: generating set is empty");
  }
  if (names.empty()) {
    names = default_names(gens.size());
  } else if (names.size() != gens.size()) {
    throw Error("with_generators: names must match generator count");
  }
  spec->gens_ = std::move(gens);
  spec->gen_names_ = std::move(names);
  spec->gen_alphabet_ =
      std::make_shared<const words::Alphabet>(spec->gen_names_);
  return spec;
}

void SemigroupSpec::check_element(const Element& x) const {
  if (const auto* pres = std::get_if<Presented>(&variant_)) {
    const auto* w = std::get_if<words::Word>(&x.v);
    if (!w) {
      throw Error("element/spec mismatch: expected a word");
    }
    for (words::Letter l : *w) {
      if (l >= pres->system.alphabet().size()) {
        throw Error("element/spec mismatch: letter out of range");
      }
    }
    if (w->empty() && !monoid_) {
      throw Error("empty word only permitted for monoids");
    }
  } else if (const auto* tm = std::get_if<TupleMonoid>(&variant_)) {
    const auto* t = std::get_if<Tuple>(&x.v);
    if (!t || static_cast<int>(t->size()) != tm->dim) {
      throw Error("element/spec mismatch: expected a tuple of dimension " +
                  std::to_string(tm->dim));
    }
    if (!tm->signed_entries && !all_nonneg(*t)) {
      throw Error("element/spec mismatch: negative entry in N_0^k element");
    }
  } else if (const auto* gf = std::get_if<GridFlag>(&variant_)) {
    const auto* g = std::get_if<GridElem>(&x.v);
    if (!g || static_cast<int>(g->ints.size()) != gf->dim) {
      throw Error("element/spec mismatch: expected a grid element");
    }
    if (gf->additive_flag ? g->flag < 0 : (g->flag != 0 && g->flag != 1)) {
      throw Error("element/spec mismatch: invalid flag");
    }
  } else if (const auto* rm = std::get_if<ReesMatrix>(&variant_)) {
    const auto* r = std::get_if<ReesElem>(&x.v);
    if (!r || r->i < 0 || r->i >= rm->n || r->lam < 0 || r->lam >= rm->m ||
        static_cast<int>(r->g.size()) != rm->group_dim) {
      throw Error("element/spec mismatch: expected a Rees triple");
    }
  } else if (const auto* pr = std::get_if<Product>(&variant_)) {
    const auto* p = std::get_if<PairElem>(&x.v);
    if (!p) {
      throw Error("element/spec mismatch: expected a pair");
    }
    pr->left->check_element(*p->first);
    pr->right->check_element(*p->second);
  } else if (const auto* du = std::get_if<Dual>(&variant_)) {
    du->base->check_element(x);
  } else if (const auto* ft = std::get_if<FiniteTable>(&variant_)) {
    const auto* t = std::get_if<TableElem>(&x.v);
    if (!t || t->idx < 0 ||
        t->idx >= static_cast<int>(ft->table.size())) {
      throw Error("element/spec mismatch: expected a table element");
    }
  }
}

Element SemigroupSpec::multiply(const Element& x, const Element& y) const {
  check_element(x);
  check_element(y);
  if (const auto* pres = std::get_if<Presented>(&variant_)) {
    words::Word w = std::get<words::Word>(x.v);
    const auto& wy = std::get<words::Word>(y.v);
    w.insert(w.end(), wy.begin(), wy.end());
    return make_word_elem(pres->system.normal_form(std::move(w)));
  }
  if (std::holds_alternative<TupleMonoid>(variant_)) {
    return make_tuple_elem(
        add_tuples(std::get<Tuple>(x.v), std::get<Tuple>(y.v)));
  }
  if (const auto* gf = std::get_if<GridFlag>(&variant_)) {
    const auto& gx = std::get<GridElem>(x.v);
    const auto& gy = std::get<GridElem>(y.v);
    Int flag = gf->additive_flag ? gx.flag + gy.flag : gx.flag * gy.flag;
    return make_grid_elem(add_tuples(gx.ints, gy.ints), flag);
  }
  if (const auto* rm = std::get_if<ReesMatrix>(&variant_)) {
    const auto& rx = std::get<ReesElem>(x.v);
    const auto& ry = std::get<ReesElem>(y.v);
    Tuple g = add_tuples(add_tuples(rx.g, rm->p[rx.lam][ry.i]), ry.g);
    return make_rees_elem(rx.i, std::move(g), ry.lam);
  }
  if (const auto* pr = std::get_if<Product>(&variant_)) {
    const auto& px = std::get<PairElem>(x.v);
    const auto& py = std::get<PairElem>(y.v);
    return make_pair_elem(pr->left->multiply(*px.first, *py.first),
                          pr->right->multiply(*px.second, *py.second));
  }
  if (const auto* du = std::get_if<Dual>(&variant_)) {
    return du->base->multiply(y, x);
  }
  const auto& ft = std::get<FiniteTable>(variant_);
  return make_table_elem(
      ft.table[std::get<TableElem>(x.v).idx][std::get<TableElem>(y.v).idx]);
}

Element SemigroupSpec::identity() const {
  if (!monoid_) {
    throw Error("identity: spec is not a monoid");
  }
  if (std::holds_alternative<Presented>(variant_)) {
    return make_word_elem({});
  }
  if (const auto* tm = std::get_if<TupleMonoid>(&variant_)) {
    return make_tuple_elem(Tuple(tm->dim, 0));
  }
  if (const auto* gf = std::get_if<GridFlag>(&variant_)) {
    return make_grid_elem(Tuple(gf->dim, 0), gf->additive_flag ? 0 : 1);
  }
  if (const auto* pr = std::get_if<Product>(&variant_)) {
    return make_pair_elem(pr->left->identity(), pr->right->identity());
  }
  if (const auto* du = std::get_if<Dual>(&variant_)) {
    return du->base->identity();
  }
  if (const auto* ft = std::get_if<FiniteTable>(&variant_)) {
    const int n = static_cast<int>(ft->table.size());
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        ok = ft->table[e][x] == x && ft->table[x][e] == x;
      }
      if (ok) {
        return make_table_elem(e);
      }
    }
  }
  throw Error("identity: no identity element");
}

bool SemigroupSpec::is_idempotent(const Element& x) const {
  return multiply(x, x) == x;
}

std::string SemigroupSpec::format(const Element& x) const {
  if (const auto* pres = std::get_if<Presented>(&variant_)) {
    return pres->system.alphabet().format(std::get<words::Word>(x.v));
  }
  if (std::holds_alternative<TupleMonoid>(variant_)) {
    return format_tuple(std::get<Tuple>(x.v));
  }
  if (std::holds_alternative<GridFlag>(variant_)) {
    const auto& g = std::get<GridElem>(x.v);
    std::string out = "(";
    for (size_t i = 0; i < g.ints.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(g.ints[i]);
    }
    out += ';';
    out += std::to_string(g.flag);
    out += ')';
    return out;
  }
  if (std::holds_alternative<ReesMatrix>(variant_)) {
    const auto& r = std::get<ReesElem>(x.v);
    return "(" + std::to_string(r.i + 1) + "|" + format_tuple(r.g) + "|" +
           std::to_string(r.lam + 1) + ")";
  }
  if (const auto* pr = std::get_if<Product>(&variant_)) {
    const auto& p = std::get<PairElem>(x.v);
    return "<" + pr->left->format(*p.first) + "," +
           pr->right->format(*p.second) + ">";
  }
  if (const auto* du = std::get_if<Dual>(&variant_)) {
    return du->base->format(x);
  }
  const auto& ft = std::get<FiniteTable>(variant_);
  return ft.names[std::get<TableElem>(x.v).idx];
}

Element SemigroupSpec::eval_word(const words::Word& w) const {
  if (w.empty()) {
    return identity();  // throws unless the spec is a monoid
  }
  Element acc = gens_.at(w[0]);
  for (size_t i = 1; i < w.size(); ++i) {
    acc = multiply(acc, gens_.at(w[i]));
  }
  return acc;
}

namespace {

// Cartesian combination used by product division.
std::optional<std::vector<Element>> combine_pairs(
    const std::optional<std::vector<Element>>& ls,
    const std::optional<std::vector<Element>>& rs) {
  if (!ls || !rs) {
    return std::nullopt;
  }
  std::vector<Element> out;
  for (const auto& l : *ls) {
    for (const auto& r : *rs) {
      out.push_back(make_pair_elem(l, r));
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<Element>> SemigroupSpec::right_divide(
    const Element& v, const Element& a) const {
  check_element(v);
  check_element(a);
  std::vector<Element> out;
  if (std::holds_alternative<Presented>(variant_)) {
    return std::nullopt;
  }
  if (const auto* tm = std::get_if<TupleMonoid>(&variant_)) {
    Tuple x = sub_tuples(std::get<Tuple>(v.v), std::get<Tuple>(a.v));
    if (tm->signed_entries || all_nonneg(x)) {
      out.push_back(make_tuple_elem(std::move(x)));
    }
    return out;
  }
  if (const auto* gf = std::get_if<GridFlag>(&variant_)) {
    const auto& gv = std::get<GridElem>(v.v);
    const auto& ga = std::get<GridElem>(a.v);
    Tuple ints = sub_tuples(gv.ints, ga.ints);
    if (gf->additive_flag) {
      Int f = gv.flag - ga.flag;
      if (f >= 0) {
        out.push_back(make_grid_elem(std::move(ints), f));
      }
    } else if (ga.flag == 1) {
      out.push_back(make_grid_elem(std::move(ints), gv.flag));
    } else if (gv.flag == 0) {  // x * 0 = 0 for either flag of x
      out.push_back(make_grid_elem(ints, 0));
      out.push_back(make_grid_elem(ints, 1));
    }
    return out;
  }
  if (const auto* rm = std::get_if<ReesMatrix>(&variant_)) {
    const auto& rv = std::get<ReesElem>(v.v);
    const auto& ra = std::get<ReesElem>(a.v);
    if (rv.lam != ra.lam) {
      return out;
    }
    for (int lam = 0; lam < rm->m; ++lam) {
      Tuple g = sub_tuples(sub_tuples(rv.g, ra.g), rm->p[lam][ra.i]);
      out.push_back(make_rees_elem(rv.i, std::move(g), lam));
    }
    return out;
  }
  if (const auto* pr = std::get_if<Product>(&variant_)) {
    const auto& pv = std::get<PairElem>(v.v);
    const auto& pa = std::get<PairElem>(a.v);
    return combine_pairs(pr->left->right_divide(*pv.first, *pa.first),
                         pr->right->right_divide(*pv.second, *pa.second));
  }
  if (const auto* du = std::get_if<Dual>(&variant_)) {
    return du->base->left_divide(v, a);
  }
  const auto& ft = std::get<FiniteTable>(variant_);
  const int n = static_cast<int>(ft.table.size());
  for (int x = 0; x < n; ++x) {
    if (ft.table[x][std::get<TableElem>(a.v).idx] ==
        std::get<TableElem>(v.v).idx) {
      out.push_back(make_table_elem(x));
    }
  }
  return out;
}

std::optional<std::vector<Element>> SemigroupSpec::left_divide(
    const Element& v, const Element& a) const {
  check_element(v);
  check_element(a);
  std::vector<Element> out;
  if (std::holds_alternative<Presented>(variant_)) {
    return std::nullopt;
  }
  if (std::holds_alternative<TupleMonoid>(variant_) ||
      std::holds_alternative<GridFlag>(variant_)) {
    return right_divide(v, a);  // commutative variants
  }
  if (const auto* rm = std::get_if<ReesMatrix>(&variant_)) {
    const auto& rv = std::get<ReesElem>(v.v);
    const auto& ra = std::get<ReesElem>(a.v);
    if (rv.i != ra.i) {
      return out;
    }
    for (int j = 0; j < rm->n; ++j) {
      Tuple g = sub_tuples(sub_tuples(rv.g, ra.g), rm->p[ra.lam][j]);
      // a * x with x = (j, g, rv.lam): g sits to the right of p[ra.lam][j]
      out.push_back(make_rees_elem(j, std::move(g), rv.lam));
    }
    return out;
  }
  if (const auto* pr = std::get_if<Product>(&variant_)) {
    const auto& pv = std::get<PairElem>(v.v);
    const auto& pa = std::get<PairElem>(a.v);
    return combine_pairs(pr->left->left_divide(*pv.first, *pa.first),
                         pr->right->left_divide(*pv.second, *pa.second));
  }
  if (const auto* du = std::get_if<Dual>(&variant_)) {
    return du->base->right_divide(v, a);
  }
  const auto& ft = std::get<FiniteTable>(variant_);
  const int n = static_cast<int>(ft.table.size());
  for (int x = 0; x < n; ++x) {
    if (ft.table[std::get<TableElem>(a.v).idx][x] ==
        std::get<TableElem>(v.v).idx) {
      out.push_back(make_table_elem(x));
    }
  }
  return out;
}

SpecPtr SemigroupSpec::dual_of(SpecPtr base) {
  bool monoid = base->is_monoid();
  auto dual = std::shared_ptr<SemigroupSpec>(
      new SemigroupSpec(Variant(Dual{std::move(base)}), monoid));
  dual->init_generators();
  return dual;
}

SpecPtr dual_spec(const SpecPtr& spec) {
  if (const auto* du = std::get_if<SemigroupSpec::Dual>(&spec->variant())) {
    return du->base;
  }
  return SemigroupSpec::dual_of(spec);
}

std::vector<Element> rees_generating_set(const SemigroupSpec::ReesMatrix& rm) {
  Tuple zero(rm.group_dim, 0);
  if (std::find(rm.group_gens.begin(), rm.group_gens.end(), zero) ==
      rm.group_gens.end()) {
    throw Error(
        "rees_generating_set: group generating set must contain the identity");
  }
  std::vector<Element> out;
  std::set<std::string> seen;
  for (int i = 0; i < rm.n; ++i) {
    for (int j = 0; j < rm.n; ++j) {
      for (int lam = 0; lam < rm.m; ++lam) {
        for (int mu = 0; mu < rm.m; ++mu) {
          for (const auto& x : rm.group_gens) {
            Tuple g = sub_tuples(x, rm.p[mu][j]);
            Element e = make_rees_elem(i, std::move(g), lam);
            std::string key = "(" + std::to_string(i + 1) + "|" +
                              format_tuple(std::get<ReesElem>(e.v).g) + "|" +
                              std::to_string(lam + 1) + ")";
            if (seen.insert(key).second) {
              out.push_back(std::move(e));
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Element& a, const Element& b) {
    const auto& ra = std::get<ReesElem>(a.v);
    const auto& rb = std::get<ReesElem>(b.v);
    std::string ka = "(" + std::to_string(ra.i + 1) + "|" +
                     format_tuple(ra.g) + "|" + std::to_string(ra.lam + 1) +
                     ")";
    std::string kb = "(" + std::to_string(rb.i + 1) + "|" +
                     format_tuple(rb.g) + "|" + std::to_string(rb.lam + 1) +
                     ")";
    return canonical_less(ka, kb);
  });
  return out;
}

}  // namespace semiends::models
