// Copyright 2026 The dsg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dsg/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "dsg/error.hpp"

namespace dsg {

std::uint64_t fnv1a64(std::span<const unsigned char> bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

constexpr std::size_t kCayleyTableLimit = 4096;

using Images = std::vector<Point>;

struct ImagesHash {
  std::size_t operator()(const Images& v) const {
    return static_cast<std::size_t>(fnv1a64(
        {reinterpret_cast<const unsigned char*>(v.data()), v.size() * sizeof(Point)}));
  }
};

void check_uniform(std::span<const Permutation> generators) {
  if (generators.empty())
    throw Error(ErrorCode::kInvalidArgument, "generator list is empty");
  for (const auto& g : generators)
    if (g.degree() != generators[0].degree() || g.degree() == 0)
      throw Error(ErrorCode::kInvalidArgument, "generators have differing or zero degree");
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

Images compose(const Images& a, const Images& b) {  // a(b(x))
  Images r(b.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[b[i]];
  return r;
}

Images invert(const Images& a) {
  Images r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<Point>(i);
  return r;
}

Images identity_images(std::size_t degree) {
  Images r(degree);
  std::iota(r.begin(), r.end(), Point{0});
  return r;
}

bool is_identity(const Images& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

// ---- Schreier-Sims ---------------------------------------------------------

struct ChainLevel {
  Point base = 0;
  std::vector<Images> strong_gens;
  std::vector<long> orbit_pos;      // point -> index into orbit, or -1
  std::vector<Point> orbit;
  std::vector<Images> transversal;  // transversal[k](base) == orbit[k]

  void rebuild(std::size_t degree) {
    orbit_pos.assign(degree, -1);
    orbit.assign(1, base);
    transversal.assign(1, identity_images(degree));
    orbit_pos[base] = 0;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& s : strong_gens) {
        Point next = s[orbit[k]];
        if (orbit_pos[next] >= 0) continue;
        orbit_pos[next] = static_cast<long>(orbit.size());
        orbit.push_back(next);
        transversal.push_back(compose(s, transversal[k]));
      }
    }
  }
};

class StabilizerChain {
 public:
  StabilizerChain(std::span<const Permutation> generators) : degree_(generators[0].degree()) {
    for (const auto& g : generators) {
      Images im(g.images().begin(), g.images().end());
      if (is_identity(im)) continue;
      // Make sure the current base is moved by every generator.
      bool moves_base = false;
      for (const auto& level : levels_)
        if (im[level.base] != level.base) moves_base = true;
      if (!moves_base) add_level(first_moved(im));
      levels_[0].strong_gens.push_back(im);
    }
    if (levels_.empty()) return;
    // Strong generators of deeper levels: those fixing earlier base points.
    for (std::size_t i = 1; i < levels_.size(); ++i)
      for (const auto& s : levels_[0].strong_gens)
        if (fixes_prefix(s, i)) levels_[i].strong_gens.push_back(s);
    for (auto& level : levels_) level.rebuild(degree_);
    complete();
  }

  std::uint64_t order() const {
    std::uint64_t order = 1;
    for (const auto& level : levels_) order = saturating_mul(order, level.orbit.size());
    return order;
  }

 private:
  static Point first_moved(const Images& im) {
    for (std::size_t i = 0; i < im.size(); ++i)
      if (im[i] != i) return static_cast<Point>(i);
    return 0;
  }

  bool fixes_prefix(const Images& s, std::size_t level_count) const {
    for (std::size_t j = 0; j < level_count; ++j)
      if (s[levels_[j].base] != levels_[j].base) return false;
    return true;
  }

  void add_level(Point base) {
    ChainLevel level;
    level.base = base;
    levels_.push_back(std::move(level));
  }

  // Sifts g starting at level `from`; returns the residue and the level at
  // which sifting stopped (levels_.size() when it passed every level).
  std::pair<Images, std::size_t> sift(Images g, std::size_t from) const {
    for (std::size_t j = from; j < levels_.size(); ++j) {
      const auto& level = levels_[j];
      long pos = level.orbit_pos[g[level.base]];
      if (pos < 0) return {std::move(g), j};
      g = compose(invert(level.transversal[static_cast<std::size_t>(pos)]), g);
    }
    return {std::move(g), levels_.size()};
  }

  void complete() {
    std::size_t i = levels_.size();
    while (i-- > 0) {
      bool restarted = false;
      auto& level = levels_[i];
      for (std::size_t k = 0; !restarted && k < level.orbit.size(); ++k) {
        for (std::size_t si = 0; !restarted && si < level.strong_gens.size(); ++si) {
          const Images& s = level.strong_gens[si];
          Point image = s[level.orbit[k]];
          const Images& u_image =
              level.transversal[static_cast<std::size_t>(level.orbit_pos[image])];
          Images schreier = compose(invert(u_image), compose(s, level.transversal[k]));
          auto [residue, stop] = sift(std::move(schreier), i + 1);
          if (stop == levels_.size() && is_identity(residue)) continue;
          if (stop == levels_.size()) add_level(first_moved(residue));
          for (std::size_t l = i + 1; l <= stop; ++l) {
            levels_[l].strong_gens.push_back(residue);
            levels_[l].rebuild(degree_);
          }
          i = stop + 1;  // the loop decrement resumes at level `stop`
          restarted = true;
        }
      }
    }
  }

  std::size_t degree_;
  std::vector<ChainLevel> levels_;
};

// ---- Named constructions ---------------------------------------------------

Permutation cycle_perm(std::size_t degree, Point first, Point length) {
  std::vector<std::vector<Point>> cycles(1);
  for (Point i = 0; i < length; ++i) cycles[0].push_back(first + i);
  return Permutation::from_cycles(degree, cycles);
}

// Left-regular representation of an abstractly given group on its own
// elements 0..n-1.
template <class Mul>
std::vector<Permutation> regular_generators(std::size_t n, std::span<const std::size_t> gens,
                                            Mul mul) {
  std::vector<Permutation> out;
  for (std::size_t g : gens) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(mul(g, x));
    out.emplace_back(std::move(images));
  }
  return out;
}

std::vector<Permutation> dicyclic_generators(std::uint32_t n) {
  // Elements a^i x^j stored as i + 2n*j; x a x^-1 = a^-1, x^2 = a^n.
  const std::size_t two_n = 2 * std::size_t{n};
  auto mul = [two_n, n](std::size_t u, std::size_t v) {
    std::size_t i1 = u % two_n, j1 = u / two_n, i2 = v % two_n, j2 = v / two_n;
    if (j1 == 0) return (i1 + i2) % two_n + two_n * j2;
    std::size_t i = (i1 + two_n - i2 + (j2 ? n : 0)) % two_n;
    return i + two_n * (1 - j2);
  };
  const std::size_t gens[] = {1, two_n};
  return regular_generators(2 * two_n, gens, mul);
}

std::vector<Permutation> small_dihedral_generators(std::uint32_t n) {
  // Elements r^i s^j stored as i + n*j, order 2n.
  auto mul = [n](std::size_t u, std::size_t v) {
    std::size_t i1 = u % n, j1 = u / n, i2 = v % n, j2 = v / n;
    std::size_t i = j1 ? (i1 + n - i2) % n : (i1 + i2) % n;
    return i + n * (j1 ^ j2);
  };
  const std::size_t gens[] = {1 % n, n};
  return regular_generators(2 * std::size_t{n}, gens, mul);
}

// GF(q) for q = p^k with k <= 3; elements are base-p digit vectors.
class SmallField {
 public:
  explicit SmallField(std::uint32_t q) : q_(q) {
    auto pk = prime_power(q);
    p_ = pk->first;
    k_ = pk->second;
    find_modulus();
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_[a * q_ + b] = slow_add(a, b);
        mul_[a * q_ + b] = slow_mul(a, b);
      }
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const {
    for (std::uint32_t b = 0; b < q_; ++b)
      if (add(a, b) == 0) return b;
    return 0;
  }
  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul(a, b) == 1) return b;
    throw Error(ErrorCode::kInternal, "zero has no inverse");
  }
  std::uint32_t primitive_element() const {
    for (std::uint32_t w = 2; w < q_; ++w) {
      std::uint32_t x = w, order = 1;
      while (x != 1) {
        x = mul(x, w);
        ++order;
      }
      if (order == q_ - 1) return w;
    }
    return 1;  // GF(2)
  }
  std::uint32_t degree() const { return k_; }

 private:
  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(k_);
    for (auto& x : d) {
      x = a % p_;
      a /= p_;
    }
    return d;
  }
  std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
    return a;
  }
  std::uint32_t slow_add(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    for (std::size_t i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
    return from_digits(da);
  }
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    std::vector<std::uint32_t> prod(2 * k_, 0);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // Reduce with x^k = -(c_{k-1} x^{k-1} + ... + c_0).
    for (std::size_t d = 2 * k_ - 1; d >= k_; --d) {
      std::uint32_t lead = prod[d];
      prod[d] = 0;
      for (std::size_t i = 0; i < k_; ++i)
        prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i]) * lead) % p_;
      if (d == k_) break;
    }
    prod.resize(k_);
    return from_digits(prod);
  }
  void find_modulus() {
    modulus_.assign(k_, 0);
    if (k_ == 1) return;
    // A polynomial of degree 2 or 3 is irreducible iff it has no root.
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < k_; ++i) count *= p_;
    for (std::uint32_t code = 0; code < count; ++code) {
      std::uint32_t c = code;
      for (auto& m : modulus_) {
        m = c % p_;
        c /= p_;
      }
      bool has_root = false;
      for (std::uint32_t x = 0; x < p_ && !has_root; ++x) {
        std::uint32_t value = 1;  // x^k
        for (std::uint32_t i = 0; i < k_; ++i) value = value * x % p_;
        std::uint32_t power = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
          value = (value + modulus_[i] * power) % p_;
          power = power * x % p_;
        }
        has_root = value == 0;
      }
      if (!has_root) return;
    }
    throw Error(ErrorCode::kInternal, "no irreducible polynomial found");
  }

  std::uint32_t q_, p_ = 0, k_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_, mul_;
};

std::vector<Permutation> psl2_generators(std::uint32_t q) {
  SmallField field(q);
  const std::size_t degree = std::size_t{q} + 1;
  const Point infinity = q;
  std::vector<Point> translate(degree), invert_neg(degree);
  for (Point x = 0; x < q; ++x) {
    translate[x] = field.add(x, 1);
    invert_neg[x] = x == 0 ? infinity : field.neg(field.inv(x));
  }
  translate[infinity] = infinity;
  invert_neg[infinity] = 0;
  std::vector<Permutation> gens{Permutation(translate), Permutation(invert_neg)};
  if (field.degree() > 1) {
    // x+1 and -1/x only generate PSL(2,p) over the prime field; the scaling
    // x -> w^2 x (w primitive) supplies the remaining translations.
    std::uint32_t w = field.primitive_element();
    std::uint32_t w2 = field.mul(w, w);
    std::vector<Point> scale(degree);
    for (Point x = 0; x < q; ++x) scale[x] = field.mul(w2, x);
    scale[infinity] = infinity;
    gens.emplace_back(std::move(scale));
  }
  return gens;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r = saturating_mul(r, i);
  return r;
}

std::vector<Permutation> shift_into(const FiniteGroup& g, std::size_t offset, std::size_t degree) {
  std::vector<Permutation> out;
  for (const auto& gen : g.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t i = 0; i < gen.degree(); ++i)
      images[offset + i] = static_cast<Point>(offset + gen(static_cast<Point>(i)));
    out.emplace_back(std::move(images));
  }
  return out;
}

ElementId evaluate_word(const FiniteGroup& n, const GeneratorWord& word) {
  ElementId result = FiniteGroup::identity();
  for (auto [gen, exponent] : word) {
    if (gen >= n.generator_ids().size())
      throw Error(ErrorCode::kAction, "action word refers to generator g" + std::to_string(gen) +
                                          " but the normal factor has " +
                                          std::to_string(n.generator_ids().size()));
    ElementId g = n.generator_ids()[gen];
    if (exponent < 0) g = n.inverse(g);
    for (std::int64_t i = 0; i < std::abs(static_cast<std::int64_t>(exponent)); ++i)
      result = n.mul(result, g);
  }
  return result;
}

// Extends generator images to an automorphism of n; throws kAction when the
// images do not define one.
std::vector<ElementId> extend_automorphism(const FiniteGroup& n,
                                           const std::vector<ElementId>& gen_images) {
  const std::size_t order = n.order();
  std::vector<ElementId> image(order, std::numeric_limits<ElementId>::max());
  image[FiniteGroup::identity()] = FiniteGroup::identity();
  std::deque<ElementId> queue{FiniteGroup::identity()};
  while (!queue.empty()) {
    ElementId e = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < gen_images.size(); ++s) {
      ElementId child = n.mul(e, n.generator_ids()[s]);
      ElementId expected = n.mul(image[e], gen_images[s]);
      if (image[child] == std::numeric_limits<ElementId>::max()) {
        image[child] = expected;
        queue.push_back(child);
      } else if (image[child] != expected) {
        throw Error(ErrorCode::kAction, "action table is not a homomorphism: generator images "
                                        "do not respect the relations of the normal factor");
      }
    }
  }
  std::vector<bool> hit(order, false);
  for (ElementId x : image) {
    if (hit[x])
      throw Error(ErrorCode::kAction, "action table maps the normal factor non-injectively");
    hit[x] = true;
  }
  return image;
}

std::vector<Permutation> semidirect_generators(const FiniteGroup& normal, const FiniteGroup& acting,
                                               const ActionTable& table) {
  if (table.images.size() != acting.generators().size())
    throw Error(ErrorCode::kAction, "action table has " + std::to_string(table.images.size()) +
                                        " rows; the acting factor has " +
                                        std::to_string(acting.generators().size()) +
                                        " generators");
  const std::size_t n_order = normal.order();
  const std::size_t degree = n_order + acting.degree();
  std::vector<Permutation> gens;
  for (ElementId n : normal.generator_ids()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t x = 0; x < n_order; ++x)
      images[x] = normal.mul(n, static_cast<ElementId>(x));
    gens.emplace_back(std::move(images));
  }
  for (std::size_t k = 0; k < acting.generators().size(); ++k) {
    const auto& row = table.images[k];
    if (row.size() != normal.generators().size())
      throw Error(ErrorCode::kAction, "action table row " + std::to_string(k) + " has " +
                                          std::to_string(row.size()) +
                                          " images; the normal factor has " +
                                          std::to_string(normal.generators().size()) +
                                          " generators");
    std::vector<ElementId> gen_images;
    for (const auto& word : row) gen_images.push_back(evaluate_word(normal, word));
    auto automorphism = extend_automorphism(normal, gen_images);
    std::vector<Point> images(degree);
    for (std::size_t x = 0; x < n_order; ++x) images[x] = automorphism[x];
    const auto& kgen = acting.generators()[k];
    for (std::size_t i = 0; i < kgen.degree(); ++i)
      images[n_order + i] = static_cast<Point>(n_order + kgen(static_cast<Point>(i)));
    gens.emplace_back(std::move(images));
  }
  return gens;
}

const ActionTable& lookup_action(const std::string& id, const RealizeOptions& options) {
  if (options.actions)
    if (const auto* t = options.actions->find(id)) return *t;
  if (const auto* t = ActionRegistry::builtin().find(id)) return *t;
  throw Error(ErrorCode::kAction, "unknown action id '" + id + "'");
}

std::vector<Permutation> spec_generators(const GroupSpec& spec, const RealizeOptions& options) {
  const auto n = spec.params.empty() ? 0U : spec.params[0];
  switch (spec.kind) {
    case Constructor::kCyclic:
      return {cycle_perm(n, 0, n)};
    case Constructor::kDihedral: {
      if (n < 3) return small_dihedral_generators(n);
      std::vector<Point> reflection(n);
      for (Point i = 0; i < n; ++i) reflection[i] = (n - i) % n;
      return {cycle_perm(n, 0, n), Permutation(reflection)};
    }
    case Constructor::kDicyclic:
      return dicyclic_generators(n);
    case Constructor::kSymmetric:
      if (n < 2) return {Permutation::identity(1)};
      return {cycle_perm(n, 0, 2), cycle_perm(n, 0, n)};
    case Constructor::kAlternating:
      if (n < 3) return {Permutation::identity(n)};
      return {cycle_perm(n, 0, 3), n % 2 ? cycle_perm(n, 0, n) : cycle_perm(n, 1, n - 1)};
    case Constructor::kElemAbelian: {
      const std::uint32_t p = spec.params[0], k = spec.params[1];
      std::vector<Permutation> gens;
      for (std::uint32_t i = 0; i < k; ++i) gens.push_back(cycle_perm(std::size_t{p} * k, i * p, p));
      return gens;
    }
    case Constructor::kDirect: {
      auto a = realize(spec.operands[0], options);
      auto b = realize(spec.operands[1], options);
      const std::size_t degree = a->degree() + b->degree();
      auto gens = shift_into(*a, 0, degree);
      for (auto& g : shift_into(*b, a->degree(), degree)) gens.push_back(std::move(g));
      return gens;
    }
    case Constructor::kSemidirect: {
      auto normal = realize(spec.operands[0], options);
      auto acting = realize(spec.operands[1], options);
      return semidirect_generators(*normal, *acting, lookup_action(spec.action_id, options));
    }
    case Constructor::kPsl2:
      return psl2_generators(n);
    case Constructor::kRaw:
      return spec.generators;
  }
  throw Error(ErrorCode::kInternal, "unhandled constructor");
}

}  // namespace

// ---- Element tables ---------------------------------------------------------

ElementTable enumerate_elements(std::span<const Permutation> generators, std::uint64_t order_cap) {
  check_uniform(generators);
  const std::size_t degree = generators[0].degree();
  std::vector<Images> gens;
  for (const auto& g : generators) gens.emplace_back(g.images().begin(), g.images().end());

  std::unordered_set<Images, ImagesHash> seen;
  std::vector<Images> found{identity_images(degree)};
  seen.insert(found[0]);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& g : gens) {
      Images next = compose(found[i], g);
      if (seen.insert(next).second) {
        found.push_back(std::move(next));
        if (found.size() > order_cap)
          throw Error(ErrorCode::kOrderCap,
                      "element table exceeds the order cap of " + std::to_string(order_cap));
      }
    }
  }
  std::sort(found.begin(), found.end());
  ElementTable table;
  table.degree = degree;
  table.images.reserve(found.size() * degree);
  for (const auto& e : found) table.images.insert(table.images.end(), e.begin(), e.end());
  return table;
}

std::uint64_t stabilizer_chain_order(std::span<const Permutation> generators) {
  check_uniform(generators);
  return StabilizerChain(generators).order();
}

// ---- FiniteGroup ----------------------------------------------------------

FiniteGroup::FiniteGroup(std::vector<Permutation> generators, std::string label,
                         std::uint64_t order_cap)
    : label_(std::move(label)), generators_(std::move(generators)) {
  check_uniform(generators_);
  chain_order_ = stabilizer_chain_order(generators_);
  if (chain_order_ > order_cap)
    throw Error(ErrorCode::kOrderCap, "group order " + std::to_string(chain_order_) +
                                          " exceeds the order cap of " +
                                          std::to_string(order_cap));
  table_ = enumerate_elements(generators_, order_cap);
  const std::size_t order = table_.size();
  if (order != chain_order_)
    throw Error(ErrorCode::kInternal, "element table has " + std::to_string(order) +
                                          " elements but the stabilizer chain gives " +
                                          std::to_string(chain_order_));

  for (const auto& g : generators_) generator_ids_.push_back(index_of(g));

  // Right multiplication by each generator, then a breadth-first spanning
  // tree from the identity fills the Cayley table row by row.
  if (order <= kCayleyTableLimit) {
    const std::size_t ngens = generators_.size();
    std::vector<ElementId> right(order * ngens);
    Images buffer(degree());
    for (std::size_t e = 0; e < order; ++e) {
      auto im = images(static_cast<ElementId>(e));
      for (std::size_t s = 0; s < ngens; ++s) {
        for (std::size_t x = 0; x < degree(); ++x) buffer[x] = im[generators_[s](static_cast<Point>(x))];
        right[e * ngens + s] = static_cast<ElementId>(find(buffer));
      }
    }
    std::vector<std::pair<ElementId, std::uint32_t>> parent(order, {0, 0});
    std::vector<ElementId> bfs{identity()};
    std::vector<bool> reached(order, false);
    reached[0] = true;
    for (std::size_t i = 0; i < bfs.size(); ++i)
      for (std::size_t s = 0; s < ngens; ++s) {
        ElementId child = right[bfs[i] * ngens + s];
        if (reached[child]) continue;
        reached[child] = true;
        parent[child] = {bfs[i], static_cast<std::uint32_t>(s)};
        bfs.push_back(child);
      }
    cayley_.assign(order * order, 0);
    for (std::size_t a = 0; a < order; ++a) {
      std::uint16_t* row = cayley_.data() + a * order;
      row[0] = static_cast<std::uint16_t>(a);
      for (std::size_t i = 1; i < bfs.size(); ++i) {
        ElementId j = bfs[i];
        auto [p, s] = parent[j];
        row[j] = static_cast<std::uint16_t>(right[row[p] * ngens + s]);
      }
    }
  }

  inverse_.resize(order);
  Images buffer(degree());
  for (std::size_t e = 0; e < order; ++e) {
    auto im = images(static_cast<ElementId>(e));
    for (std::size_t x = 0; x < degree(); ++x) buffer[im[x]] = static_cast<Point>(x);
    inverse_[e] = static_cast<ElementId>(find(buffer));
  }
  element_order_.resize(order);
  for (std::size_t e = 0; e < order; ++e) {
    std::uint32_t k = 1;
    ElementId x = static_cast<ElementId>(e);
    while (x != identity()) {
      x = mul(x, static_cast<ElementId>(e));
      ++k;
    }
    element_order_[e] = k;
  }

  std::uint64_t h = fnv1a64({reinterpret_cast<const unsigned char*>(&table_.degree), sizeof(std::uint64_t)});
  content_hash_ = fnv1a64({reinterpret_cast<const unsigned char*>(table_.images.data()),
                           table_.images.size() * sizeof(Point)},
                          h);
}

Permutation FiniteGroup::element(ElementId e) const {
  auto im = images(e);
  return Permutation(std::vector<Point>(im.begin(), im.end()));
}

ElementId FiniteGroup::compose_lookup(ElementId a, ElementId b) const {
  auto ia = images(a), ib = images(b);
  Images buffer(degree());
  for (std::size_t x = 0; x < degree(); ++x) buffer[x] = ia[ib[x]];
  return static_cast<ElementId>(find(buffer));
}

ElementId FiniteGroup::mul(ElementId a, ElementId b) const {
  if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(a) * order() + b];
  return compose_lookup(a, b);
}

long FiniteGroup::find(std::span<const Point> target) const {
  if (target.size() != degree()) return -1;
  std::size_t lo = 0, hi = order();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto im = images(static_cast<ElementId>(mid));
    if (std::lexicographical_compare(im.begin(), im.end(), target.begin(), target.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < order() && std::ranges::equal(images(static_cast<ElementId>(lo)), target))
    return static_cast<long>(lo);
  return -1;
}

ElementId FiniteGroup::index_of(const Permutation& p) const {
  long idx = find(p.images());
  if (idx < 0) throw Error(ErrorCode::kInvalidArgument, "permutation is not in the group");
  return static_cast<ElementId>(idx);
}

Bitset FiniteGroup::closure(std::span<const ElementId> elements) const {
  Bitset members(order());
  members.set(identity());
  std::vector<ElementId> list{identity()};
  std::vector<ElementId> gens;
  for (ElementId e : elements)
    if (e != identity()) gens.push_back(e);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (ElementId g : gens) {
      ElementId next = mul(list[i], g);
      if (!members.test(next)) {
        members.set(next);
        list.push_back(next);
      }
    }
  return members;
}

Bitset FiniteGroup::cyclic_closure(ElementId x) const {
  Bitset members(order());
  ElementId y = identity();
  do {
    members.set(y);
    y = mul(y, x);
  } while (y != identity());
  return members;
}

// ---- Realization --------------------------------------------------------------

std::uint64_t theoretical_order(const GroupSpec& spec) {
  const std::uint64_t n = spec.params.empty() ? 0 : spec.params[0];
  switch (spec.kind) {
    case Constructor::kCyclic:
      return n;
    case Constructor::kDihedral:
      return 2 * n;
    case Constructor::kDicyclic:
      return 4 * n;
    case Constructor::kSymmetric:
      return factorial(n);
    case Constructor::kAlternating:
      return n < 2 ? 1 : factorial(n) / 2;
    case Constructor::kElemAbelian: {
      std::uint64_t r = 1;
      for (std::uint32_t i = 0; i < spec.params[1]; ++i) r = saturating_mul(r, spec.params[0]);
      return r;
    }
    case Constructor::kDirect:
    case Constructor::kSemidirect:
      return saturating_mul(theoretical_order(spec.operands[0]), theoretical_order(spec.operands[1]));
    case Constructor::kPsl2:
      return n * (n * n - 1) / (n % 2 ? 2 : 1);
    case Constructor::kRaw:
      return 0;
  }
  return 0;
}

std::shared_ptr<const FiniteGroup> realize(const GroupSpec& spec, const RealizeOptions& options) {
  const std::uint64_t expected = theoretical_order(spec);
  if (expected > options.order_cap)
    throw Error(ErrorCode::kOrderCap, spec.to_string() + " has order " + std::to_string(expected) +
                                          " above the order cap of " +
                                          std::to_string(options.order_cap));
  auto gens = spec_generators(spec, options);
  if (spec.kind == Constructor::kSemidirect) {
    // The acting generators fix the identity of the normal block, so the
    // chain order equals |N||K| exactly when the table is a homomorphism.
    std::uint64_t chain = stabilizer_chain_order(gens);
    if (chain != expected)
      throw Error(ErrorCode::kAction, "action '" + spec.action_id +
                                          "' is not a homomorphism into the automorphism group "
                                          "(generated order " + std::to_string(chain) +
                                          ", expected " + std::to_string(expected) + ")");
  }
  auto group = std::make_shared<const FiniteGroup>(std::move(gens), spec.to_string(), options.order_cap);
  if (expected != 0 && group->order() != expected)
    throw Error(ErrorCode::kInternal, spec.to_string() + " realized with order " +
                                          std::to_string(group->order()) + ", expected " +
                                          std::to_string(expected));
  return group;
}

std::shared_ptr<const FiniteGroup> realize(std::string_view spec_text, const RealizeOptions& options) {
  return realize(parse_group_spec(spec_text), options);
}

// ---- Quotients -------------------------------------------------------------------

QuotientGroup quotient_group(const FiniteGroup& g, const Bitset& normal) {
  if (normal.size() != g.order() || !normal.test(FiniteGroup::identity()))
    throw Error(ErrorCode::kInvalidArgument, "subgroup bitset does not belong to this group");
  auto members = normal.to_vector();
  for (ElementId x : g.generator_ids())
    for (auto n : members)
      if (!normal.test(g.conjugate(x, static_cast<ElementId>(n))))
        throw Error(ErrorCode::kNotNormal, "subgroup is not normal in " + g.label());

  const std::size_t order = g.order();
  QuotientGroup q;
  q.coset_of.assign(order, std::numeric_limits<std::uint32_t>::max());
  std::vector<ElementId> reps;
  for (std::size_t e = 0; e < order; ++e) {
    if (q.coset_of[e] != std::numeric_limits<std::uint32_t>::max()) continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(static_cast<ElementId>(e));
    for (auto n : members) q.coset_of[g.mul(static_cast<ElementId>(e), static_cast<ElementId>(n))] = c;
  }
  const std::size_t index = reps.size();
  auto action = [&](ElementId x) {
    std::vector<Point> images(index);
    for (std::size_t c = 0; c < index; ++c) images[c] = q.coset_of[g.mul(x, reps[c])];
    return images;
  };
  std::vector<Permutation> gens;
  for (ElementId x : g.generator_ids()) gens.emplace_back(action(x));
  q.group = std::make_shared<const FiniteGroup>(
      std::move(gens), g.label() + "/N" + std::to_string(members.size()), order);
  q.projection.resize(order);
  for (std::size_t e = 0; e < order; ++e) {
    auto images = action(static_cast<ElementId>(e));
    q.projection[e] = static_cast<ElementId>(q.group->find(images));
  }
  if (q.group->order() * members.size() != order)
    throw Error(ErrorCode::kInternal, "quotient order mismatch");
  return q;
}

}  // namespace dsg
