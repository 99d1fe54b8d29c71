#ifndef VARCAT_FINCAT_HPP
#define VARCAT_FINCAT_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "varcat/core.hpp"
#include "varcat/report.hpp"

namespace varcat {

// ---------------------------------------------------------------------------
// Finite categories as explicit object/morphism lists with a total
// composition table.  Values are immutable after construction; every
// operation below is a pure function of its inputs.
// ---------------------------------------------------------------------------

struct Mor {
  std::string id;
  std::string src;
  std::string tgt;
};

inline bool operator==(const Mor& a, const Mor& b) {
  return a.id == b.id && a.src == b.src && a.tgt == b.tgt;
}
inline bool operator!=(const Mor& a, const Mor& b) { return !(a == b); }
inline bool operator<(const Mor& a, const Mor& b) {
  if (a.id != b.id) return a.id < b.id;
  if (a.src != b.src) return a.src < b.src;
  return a.tgt < b.tgt;
}

struct FinCat {
  std::string name;  // label only; never part of equality
  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  std::map<std::string, std::string> identity;                       // object -> morphism id
  std::map<std::pair<std::string, std::string>, std::string> table;  // (g, f) -> g.f

  bool has_object(const std::string& x) const {
    for (const auto& o : objects)
      if (o == x) return true;
    return false;
  }
  const Mor* find_mor(const std::string& id) const {
    for (const auto& m : morphisms)
      if (m.id == id) return &m;
    return nullptr;
  }
  const Mor& mor(const std::string& id) const {
    const Mor* m = find_mor(id);
    if (!m) throw StructureError("unknown morphism id: " + id + " in " + name);
    return *m;
  }
  const std::string& identity_of(const std::string& x) const {
    auto it = identity.find(x);
    if (it == identity.end()) throw StructureError("no identity for object " + x + " in " + name);
    return it->second;
  }
  bool is_identity(const std::string& mid) const {
    const Mor& m = mor(mid);
    auto it = identity.find(m.src);
    return it != identity.end() && it->second == mid;
  }
  std::optional<std::string> composed(const std::string& g, const std::string& f) const {
    auto it = table.find({g, f});
    if (it == table.end()) return std::nullopt;
    return it->second;
  }
  // g after f; throws when not composable.
  std::string comp(const std::string& g, const std::string& f) const {
    auto c = composed(g, f);
    if (!c) throw StructureError("non-composable pair (" + g + ", " + f + ") in " + name);
    return *c;
  }
  std::vector<std::string> hom(const std::string& a, const std::string& b) const {
    std::vector<std::string> out;
    for (const auto& m : morphisms)
      if (m.src == a && m.tgt == b) out.push_back(m.id);
    return out;
  }
  std::optional<std::string> inverse_of(const std::string& mid) const {
    const Mor& m = mor(mid);
    for (const auto& c : hom(m.tgt, m.src)) {
      if (composed(c, mid) == identity_of(m.src) && composed(mid, c) == identity_of(m.tgt))
        return c;
    }
    return std::nullopt;
  }
  bool is_iso(const std::string& mid) const { return inverse_of(mid).has_value(); }
};

// Field-by-field equality of ids and tables; the name label is ignored.
// "The same up to iso" is always a separate, explicit check.
inline bool operator==(const FinCat& a, const FinCat& b) {
  return a.objects == b.objects && a.morphisms == b.morphisms && a.identity == b.identity &&
         a.table == b.table;
}
inline bool operator!=(const FinCat& a, const FinCat& b) { return !(a == b); }

// ---------------------------------------------------------------------------
// validate_category: lists every violated unit/associativity instance.
// Malformed tables are structural errors, distinct from law violations.
// ---------------------------------------------------------------------------

inline ValidationReport validate_category(const FinCat& c) {
  ValidationReport rep;
  rep.structure = "fincat:" + c.name;

  std::set<std::string> obj_set(c.objects.begin(), c.objects.end());
  if (obj_set.size() != c.objects.size())
    rep.structural("objects", {}, "duplicate object ids");
  std::set<std::string> mor_set;
  for (const auto& m : c.morphisms) {
    if (!mor_set.insert(m.id).second) rep.structural("morphisms", {m.id}, "duplicate morphism id");
    if (!obj_set.count(m.src)) rep.structural("morphisms", {m.id}, "unknown source " + m.src);
    if (!obj_set.count(m.tgt)) rep.structural("morphisms", {m.id}, "unknown target " + m.tgt);
  }
  for (const auto& x : c.objects) {
    auto it = c.identity.find(x);
    if (it == c.identity.end()) {
      rep.structural("identity", {x}, "missing identity");
      continue;
    }
    const Mor* m = c.find_mor(it->second);
    if (!m)
      rep.structural("identity", {x}, "identity bound to unknown morphism " + it->second);
    else if (m->src != x || m->tgt != x)
      rep.structural("identity", {x}, "identity " + m->id + " has endpoints " + m->src + "->" + m->tgt);
  }
  for (const auto& [x, mid] : c.identity)
    if (!obj_set.count(x)) rep.structural("identity", {x}, "identity for unknown object");
  if (rep.has_structural()) {
    rep.sort_canonical();
    return rep;  // endpoint data is unreliable; stop before law checks
  }

  // table shape: defined exactly on composable pairs.  A result bound to a
  // morphism with the wrong endpoints is a law violation, not a malformed
  // table; the unit/associativity checks below surface it.
  for (const auto& [gf, h] : c.table) {
    const Mor* g = c.find_mor(gf.first);
    const Mor* f = c.find_mor(gf.second);
    const Mor* r = c.find_mor(h);
    if (!g || !f || !r) {
      rep.structural("compose", {gf.first, gf.second}, "entry references unknown morphism");
      continue;
    }
    if (f->tgt != g->src)
      rep.structural("compose", {gf.first, gf.second}, "entry on non-composable pair");
  }
  for (const auto& g : c.morphisms)
    for (const auto& f : c.morphisms)
      if (f.tgt == g.src && !c.table.count({g.id, f.id}))
        rep.structural("compose", {g.id, f.id}, "missing entry for composable pair");
  if (rep.has_structural()) {
    rep.sort_canonical();
    return rep;
  }

  for (const auto& [gf, h] : c.table) {
    const Mor& g = c.mor(gf.first);
    const Mor& f = c.mor(gf.second);
    const Mor& r = c.mor(h);
    if (r.src != f.src || r.tgt != g.tgt)
      rep.law("compose-endpoints", {gf.first, gf.second}, f.src + "->" + g.tgt,
              r.src + "->" + r.tgt);
  }
  for (const auto& f : c.morphisms) {
    const std::string& l = c.identity_of(f.tgt);
    const std::string& r = c.identity_of(f.src);
    if (c.comp(l, f.id) != f.id)
      rep.law("unit-law", {l, f.id}, f.id, c.comp(l, f.id));
    if (c.comp(f.id, r) != f.id)
      rep.law("unit-law", {f.id, r}, f.id, c.comp(f.id, r));
  }
  for (const auto& h : c.morphisms)
    for (const auto& g : c.morphisms) {
      if (g.tgt != h.src) continue;
      for (const auto& f : c.morphisms) {
        if (f.tgt != g.src) continue;
        auto gf = c.composed(g.id, f.id);
        auto hg = c.composed(h.id, g.id);
        // guard the lookups: a rebound result may live in the wrong hom-set
        auto lv = hg ? c.composed(*hg, f.id) : std::nullopt;
        auto rv = gf ? c.composed(h.id, *gf) : std::nullopt;
        if (!lv || !rv)
          rep.law("associativity", {h.id, g.id, f.id}, lv ? *lv : "<undefined>",
                  rv ? *rv : "<undefined>");
        else if (*lv != *rv)
          rep.law("associativity", {h.id, g.id, f.id}, *lv, *rv);
      }
    }
  rep.sort_canonical();
  return rep;
}

inline void require_valid(const FinCat& c) {
  ValidationReport rep = validate_category(c);
  if (!rep.ok()) throw StructureError(rep.render());
}

// ---------------------------------------------------------------------------
// op / product / coproduct
// ---------------------------------------------------------------------------

// Reverses arrows and transposes the table.  Ids are kept unchanged, so op
// is an involution on the nose: op(op(C)) == C field by field.
inline FinCat op_category(const FinCat& c) {
  FinCat r;
  r.name = c.name.rfind("op(", 0) == 0 && c.name.back() == ')'
               ? c.name.substr(3, c.name.size() - 4)
               : "op(" + c.name + ")";
  r.objects = c.objects;
  r.morphisms = c.morphisms;
  for (auto& m : r.morphisms) std::swap(m.src, m.tgt);
  r.identity = c.identity;
  for (const auto& [gf, h] : c.table) r.table[{gf.second, gf.first}] = h;
  return r;
}

inline FinCat apply_variance(Variance g, const FinCat& c) {
  return is_minus(g) ? op_category(c) : c;
}

inline std::string pair_id(const std::string& a, const std::string& b) {
  return "pr:(" + a + "," + b + ")";
}

struct FunctorData;  // fwd

inline FinCat product_category(const FinCat& a, const FinCat& b) {
  FinCat r;
  r.name = "(" + a.name + "x" + b.name + ")";
  for (const auto& x : a.objects)
    for (const auto& y : b.objects) r.objects.push_back(pair_id(x, y));
  for (const auto& f : a.morphisms)
    for (const auto& g : b.morphisms)
      r.morphisms.push_back({pair_id(f.id, g.id), pair_id(f.src, g.src), pair_id(f.tgt, g.tgt)});
  for (const auto& x : a.objects)
    for (const auto& y : b.objects)
      r.identity[pair_id(x, y)] = pair_id(a.identity_of(x), b.identity_of(y));
  for (const auto& [gf1, h1] : a.table)
    for (const auto& [gf2, h2] : b.table)
      r.table[{pair_id(gf1.first, gf2.first), pair_id(gf1.second, gf2.second)}] = pair_id(h1, h2);
  return r;
}

inline std::string inl_id(const std::string& a) { return "inl:" + a; }
inline std::string inr_id(const std::string& a) { return "inr:" + a; }

inline FinCat coproduct_category(const FinCat& a, const FinCat& b) {
  FinCat r;
  r.name = "(" + a.name + "+" + b.name + ")";
  for (const auto& x : a.objects) r.objects.push_back(inl_id(x));
  for (const auto& x : b.objects) r.objects.push_back(inr_id(x));
  for (const auto& m : a.morphisms) r.morphisms.push_back({inl_id(m.id), inl_id(m.src), inl_id(m.tgt)});
  for (const auto& m : b.morphisms) r.morphisms.push_back({inr_id(m.id), inr_id(m.src), inr_id(m.tgt)});
  for (const auto& [x, i] : a.identity) r.identity[inl_id(x)] = inl_id(i);
  for (const auto& [x, i] : b.identity) r.identity[inr_id(x)] = inr_id(i);
  for (const auto& [gf, h] : a.table) r.table[{inl_id(gf.first), inl_id(gf.second)}] = inl_id(h);
  for (const auto& [gf, h] : b.table) r.table[{inr_id(gf.first), inr_id(gf.second)}] = inr_id(h);
  return r;
}

// ---------------------------------------------------------------------------
// Functors and natural transformations
// ---------------------------------------------------------------------------

struct FunctorData {
  FinCat source;
  FinCat target;
  std::map<std::string, std::string> obj_map;
  std::map<std::string, std::string> mor_map;

  const std::string& on_obj(const std::string& x) const {
    auto it = obj_map.find(x);
    if (it == obj_map.end()) throw StructureError("functor has no image for object " + x);
    return it->second;
  }
  const std::string& on_mor(const std::string& f) const {
    auto it = mor_map.find(f);
    if (it == mor_map.end()) throw StructureError("functor has no image for morphism " + f);
    return it->second;
  }
};

inline bool same_mapping(const FunctorData& a, const FunctorData& b) {
  return a.obj_map == b.obj_map && a.mor_map == b.mor_map;
}

inline FunctorData identity_functor(const FinCat& c) {
  FunctorData f{c, c, {}, {}};
  for (const auto& x : c.objects) f.obj_map[x] = x;
  for (const auto& m : c.morphisms) f.mor_map[m.id] = m.id;
  return f;
}

// Same object/morphism assignments read between the opposite categories.
inline FunctorData op_functor(const FunctorData& f) {
  return {op_category(f.source), op_category(f.target), f.obj_map, f.mor_map};
}

inline ValidationReport validate_functor(const FunctorData& f) {
  ValidationReport rep;
  rep.structure = "functor:" + f.source.name + "->" + f.target.name;
  for (const auto& x : f.source.objects) {
    auto it = f.obj_map.find(x);
    if (it == f.obj_map.end()) {
      rep.structural("obj-map", {x}, "missing image");
      continue;
    }
    if (!f.target.has_object(it->second))
      rep.structural("obj-map", {x}, "image not an object: " + it->second);
  }
  if (rep.has_structural()) {
    rep.sort_canonical();
    return rep;
  }
  for (const auto& m : f.source.morphisms) {
    auto it = f.mor_map.find(m.id);
    if (it == f.mor_map.end()) {
      rep.structural("mor-map", {m.id}, "missing image");
      continue;
    }
    const Mor* im = f.target.find_mor(it->second);
    if (!im) {
      rep.structural("mor-map", {m.id}, "image not a morphism: " + it->second);
      continue;
    }
    if (im->src != f.obj_map.at(m.src) || im->tgt != f.obj_map.at(m.tgt))
      rep.law("functor-endpoints", {m.id}, f.obj_map.at(m.src) + "->" + f.obj_map.at(m.tgt),
              im->src + "->" + im->tgt);
  }
  if (rep.has_structural()) {
    rep.sort_canonical();
    return rep;
  }
  for (const auto& [x, i] : f.source.identity)
    if (f.on_mor(i) != f.target.identity_of(f.on_obj(x)))
      rep.law("functor-identity", {x}, f.target.identity_of(f.on_obj(x)), f.on_mor(i));
  for (const auto& [gf, h] : f.source.table) {
    auto c = f.target.composed(f.on_mor(gf.first), f.on_mor(gf.second));
    if (!c)
      rep.law("functor-composition", {gf.first, gf.second}, f.on_mor(h), "<non-composable>");
    else if (*c != f.on_mor(h))
      rep.law("functor-composition", {gf.first, gf.second}, f.on_mor(h), *c);
  }
  rep.sort_canonical();
  return rep;
}

inline bool is_valid_functor(const FunctorData& f) { return validate_functor(f).ok(); }

// g after f
inline FunctorData compose_functors(const FunctorData& g, const FunctorData& f) {
  if (!(f.target == g.source))
    throw StructureError("compose_functors: endpoint mismatch");
  FunctorData r{f.source, g.target, {}, {}};
  for (const auto& [x, y] : f.obj_map) r.obj_map[x] = g.on_obj(y);
  for (const auto& [m, n] : f.mor_map) r.mor_map[m] = g.on_mor(n);
  return r;
}

struct NatTransfData {
  FunctorData source;  // F
  FunctorData target;  // G, parallel to F
  std::map<std::string, std::string> components;  // object of F.source -> morphism of F.target

  const std::string& at(const std::string& x) const {
    auto it = components.find(x);
    if (it == components.end()) throw StructureError("transformation has no component at " + x);
    return it->second;
  }
};

inline bool same_transf(const NatTransfData& a, const NatTransfData& b) {
  return same_mapping(a.source, b.source) && same_mapping(a.target, b.target) &&
         a.components == b.components;
}

inline ValidationReport validate_nat(const NatTransfData& t) {
  ValidationReport rep;
  rep.structure = "nat";
  if (!(t.source.source == t.target.source) || !(t.source.target == t.target.target)) {
    rep.structural("endpoints", {}, "functors not parallel");
    rep.sort_canonical();
    return rep;
  }
  const FinCat& a = t.source.source;
  const FinCat& b = t.source.target;
  for (const auto& x : a.objects) {
    auto it = t.components.find(x);
    if (it == t.components.end()) {
      rep.structural("component", {x}, "missing component");
      continue;
    }
    const Mor* m = b.find_mor(it->second);
    if (!m) {
      rep.structural("component", {x}, "component not a morphism: " + it->second);
      continue;
    }
    if (m->src != t.source.on_obj(x) || m->tgt != t.target.on_obj(x))
      rep.law("component-endpoints", {x}, t.source.on_obj(x) + "->" + t.target.on_obj(x),
              m->src + "->" + m->tgt);
  }
  if (!rep.ok()) {
    rep.sort_canonical();
    return rep;
  }
  for (const auto& f : a.morphisms) {
    const std::string lhs = b.comp(t.at(f.tgt), t.source.on_mor(f.id));
    const std::string rhs = b.comp(t.target.on_mor(f.id), t.at(f.src));
    if (lhs != rhs) rep.law("naturality", {f.id}, lhs, rhs);
  }
  rep.sort_canonical();
  return rep;
}

inline NatTransfData identity_transf(const FunctorData& f) {
  NatTransfData t{f, f, {}};
  for (const auto& x : f.source.objects) t.components[x] = f.target.identity_of(f.on_obj(x));
  return t;
}

inline NatTransfData vertical_compose(const NatTransfData& b, const NatTransfData& a) {
  if (!same_mapping(b.source, a.target))
    throw StructureError("vertical_compose: endpoint mismatch");
  NatTransfData r{a.source, b.target, {}};
  for (const auto& x : a.source.source.objects)
    r.components[x] = a.source.target.comp(b.at(x), a.at(x));
  return r;
}

// H . alpha : components H(alpha_x)
inline NatTransfData whisker_post(const FunctorData& h, const NatTransfData& a) {
  if (!(a.source.target == h.source)) throw StructureError("whisker_post: endpoint mismatch");
  NatTransfData r{compose_functors(h, a.source), compose_functors(h, a.target), {}};
  for (const auto& [x, c] : a.components) r.components[x] = h.on_mor(c);
  return r;
}

// alpha . H : components alpha_{H(x)}
inline NatTransfData whisker_pre(const NatTransfData& a, const FunctorData& h) {
  if (!(h.target == a.source.source)) throw StructureError("whisker_pre: endpoint mismatch");
  NatTransfData r{compose_functors(a.source, h), compose_functors(a.target, h), {}};
  for (const auto& x : h.source.objects) r.components[x] = a.at(h.on_obj(x));
  return r;
}

// Horizontal composite of beta : G => G' (B -> C) with alpha : F => F' (A -> B).
inline NatTransfData horizontal_compose(const NatTransfData& beta, const NatTransfData& alpha) {
  return vertical_compose(whisker_pre(beta, alpha.target), whisker_post(beta.source, alpha));
}

inline bool transf_invertible(const NatTransfData& t) {
  for (const auto& [x, c] : t.components)
    if (!t.source.target.is_iso(c)) return false;
  return true;
}

inline NatTransfData invert_transf(const NatTransfData& t) {
  NatTransfData r{t.target, t.source, {}};
  for (const auto& [x, c] : t.components) {
    auto inv = t.source.target.inverse_of(c);
    if (!inv) throw StructureError("invert_transf: component " + c + " is not invertible");
    r.components[x] = *inv;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of functors and transformations.  Iteration follows
// the stored object/morphism order, so results are deterministic.
// ---------------------------------------------------------------------------

template <typename Fn>
inline bool for_each_functor(const FinCat& a, const FinCat& b, BudgetGauge& gauge, Fn&& fn) {
  std::vector<std::string> nonid;
  for (const auto& m : a.morphisms)
    if (!a.is_identity(m.id)) nonid.push_back(m.id);

  std::vector<size_t> obj_choice(a.objects.size(), 0);
  if (a.objects.empty()) {
    FunctorData f{a, b, {}, {}};
    fn(f);
    return true;
  }
  if (b.objects.empty()) return true;  // no functors unless a is empty

  while (true) {
    if (!gauge.tick()) return false;
    FunctorData f{a, b, {}, {}};
    for (size_t i = 0; i < a.objects.size(); ++i) f.obj_map[a.objects[i]] = b.objects[obj_choice[i]];
    for (const auto& x : a.objects)
      f.mor_map[a.identity_of(x)] = b.identity_of(f.obj_map[x]);

    // fill non-identity morphisms depth-first
    bool keep_going = true;
    std::vector<std::vector<std::string>> cands(nonid.size());
    bool feasible = true;
    for (size_t i = 0; i < nonid.size(); ++i) {
      const Mor& m = a.mor(nonid[i]);
      cands[i] = b.hom(f.obj_map[m.src], f.obj_map[m.tgt]);
      if (cands[i].empty()) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      std::vector<size_t> pick(nonid.size(), 0);
      while (true) {
        if (!gauge.tick()) return false;
        for (size_t i = 0; i < nonid.size(); ++i) f.mor_map[nonid[i]] = cands[i][pick[i]];
        bool lawful = true;
        for (const auto& [gf, h] : a.table) {
          auto c = b.composed(f.mor_map[gf.first], f.mor_map[gf.second]);
          if (!c || *c != f.mor_map[h]) {
            lawful = false;
            break;
          }
        }
        if (lawful) {
          if (!fn(f)) {
            keep_going = false;
            break;
          }
        }
        size_t k = 0;
        while (k < pick.size() && ++pick[k] == cands[k].size()) pick[k++] = 0;
        if (k == pick.size()) break;
        if (pick.empty()) break;
      }
    }
    if (!keep_going) return true;
    size_t k = 0;
    while (k < obj_choice.size() && ++obj_choice[k] == b.objects.size()) obj_choice[k++] = 0;
    if (k == obj_choice.size()) break;
  }
  return true;
}

inline std::vector<FunctorData> all_functors(const FinCat& a, const FinCat& b) {
  BudgetGauge gauge{1LL << 62};
  std::vector<FunctorData> out;
  for_each_functor(a, b, gauge, [&](const FunctorData& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

template <typename Fn>
inline void for_each_nat(const FunctorData& f, const FunctorData& g, Fn&& fn) {
  const FinCat& a = f.source;
  const FinCat& b = f.target;
  std::vector<std::vector<std::string>> cands(a.objects.size());
  for (size_t i = 0; i < a.objects.size(); ++i) {
    cands[i] = b.hom(f.obj_map.at(a.objects[i]), g.obj_map.at(a.objects[i]));
    if (cands[i].empty()) return;
  }
  if (a.objects.empty()) {
    NatTransfData t{f, g, {}};
    fn(t);
    return;
  }
  std::vector<size_t> pick(a.objects.size(), 0);
  while (true) {
    NatTransfData t{f, g, {}};
    for (size_t i = 0; i < a.objects.size(); ++i) t.components[a.objects[i]] = cands[i][pick[i]];
    bool natural = true;
    for (const auto& m : a.morphisms) {
      if (b.comp(t.components[m.tgt], f.mor_map.at(m.id)) !=
          b.comp(g.mor_map.at(m.id), t.components[m.src])) {
        natural = false;
        break;
      }
    }
    if (natural) {
      if (!fn(t)) return;
    }
    size_t k = 0;
    while (k < pick.size() && ++pick[k] == cands[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
}

// ---------------------------------------------------------------------------
// functor_category: objects are all functors A -> B in enumeration order,
// morphisms all natural transformations, composition is vertical.
// Returns the category together with the enumerated data so that callers
// can translate between ids and concrete functors/transformations.
// ---------------------------------------------------------------------------

struct FunctorCategory {
  FinCat cat;
  std::vector<FunctorData> functors;      // aligned with cat.objects
  std::vector<NatTransfData> transfs;     // aligned with cat.morphisms

  size_t obj_index(const std::string& id) const {
    for (size_t i = 0; i < cat.objects.size(); ++i)
      if (cat.objects[i] == id) return i;
    throw StructureError("functor_category: unknown object " + id);
  }
  size_t mor_index(const std::string& id) const {
    for (size_t i = 0; i < cat.morphisms.size(); ++i)
      if (cat.morphisms[i].id == id) return i;
    throw StructureError("functor_category: unknown morphism " + id);
  }
  const FunctorData& functor_of(const std::string& obj_id) const { return functors[obj_index(obj_id)]; }
  const NatTransfData& transf_of(const std::string& mor_id) const { return transfs[mor_index(mor_id)]; }

  std::optional<std::string> find_functor(const FunctorData& f) const {
    for (size_t i = 0; i < functors.size(); ++i)
      if (same_mapping(functors[i], f)) return cat.objects[i];
    return std::nullopt;
  }
  std::string id_of_functor(const FunctorData& f) const {
    auto r = find_functor(f);
    if (!r) throw StructureError("functor_category: functor not in enumeration");
    return *r;
  }
  std::optional<std::string> find_transf(const NatTransfData& t) const {
    for (size_t i = 0; i < transfs.size(); ++i)
      if (same_mapping(transfs[i].source, t.source) && same_mapping(transfs[i].target, t.target) &&
          transfs[i].components == t.components)
        return cat.morphisms[i].id;
    return std::nullopt;
  }
  std::string id_of_transf(const NatTransfData& t) const {
    auto r = find_transf(t);
    if (!r) throw StructureError("functor_category: transformation not in enumeration");
    return *r;
  }
};

inline FunctorCategory functor_category(const FinCat& a, const FinCat& b) {
  FunctorCategory fc;
  fc.cat.name = "Fun(" + a.name + "," + b.name + ")";
  BudgetGauge gauge{1LL << 62};
  for_each_functor(a, b, gauge, [&](const FunctorData& f) {
    fc.functors.push_back(f);
    return true;
  });
  for (size_t i = 0; i < fc.functors.size(); ++i) fc.cat.objects.push_back("fun:#" + std::to_string(i));

  size_t next = 0;
  std::map<std::string, size_t> by_shape;  // src|tgt|components -> index, for compose lookups
  for (size_t i = 0; i < fc.functors.size(); ++i)
    for (size_t j = 0; j < fc.functors.size(); ++j)
      for_each_nat(fc.functors[i], fc.functors[j], [&](const NatTransfData& t) {
        std::string id = "nat:#" + std::to_string(next++);
        fc.cat.morphisms.push_back({id, fc.cat.objects[i], fc.cat.objects[j]});
        fc.transfs.push_back(t);
        return true;
      });

  auto transf_id = [&](size_t src_ix, size_t tgt_ix, const std::map<std::string, std::string>& comps)
      -> std::string {
    for (size_t k = 0; k < fc.transfs.size(); ++k) {
      const Mor& m = fc.cat.morphisms[k];
      if (m.src == fc.cat.objects[src_ix] && m.tgt == fc.cat.objects[tgt_ix] &&
          fc.transfs[k].components == comps)
        return m.id;
    }
    throw StructureError("functor_category: vertical composite missing from enumeration");
  };
  (void)by_shape;

  for (size_t i = 0; i < fc.functors.size(); ++i)
    fc.cat.identity[fc.cat.objects[i]] =
        transf_id(i, i, identity_transf(fc.functors[i]).components);

  for (size_t k2 = 0; k2 < fc.cat.morphisms.size(); ++k2)
    for (size_t k1 = 0; k1 < fc.cat.morphisms.size(); ++k1) {
      if (fc.cat.morphisms[k1].tgt != fc.cat.morphisms[k2].src) continue;
      NatTransfData comp = vertical_compose(fc.transfs[k2], fc.transfs[k1]);
      fc.cat.table[{fc.cat.morphisms[k2].id, fc.cat.morphisms[k1].id}] =
          transf_id(fc.obj_index(fc.cat.morphisms[k1].src), fc.obj_index(fc.cat.morphisms[k2].tgt),
                    comp.components);
    }
  return fc;
}

// ---------------------------------------------------------------------------
// Isomorphism and equivalence search
// ---------------------------------------------------------------------------

inline SearchResult<FunctorData> check_isomorphism(const FinCat& a, const FinCat& b,
                                                   const Budget& budget = {}) {
  if (a.objects.size() != b.objects.size())
    return SearchResult<FunctorData>::no("object counts differ: " +
                                         std::to_string(a.objects.size()) + " vs " +
                                         std::to_string(b.objects.size()));
  if (a.morphisms.size() != b.morphisms.size())
    return SearchResult<FunctorData>::no("morphism counts differ");
  BudgetGauge gauge{budget.functor_candidates};
  FunctorData hit;
  bool found = false;
  bool complete = for_each_functor(a, b, gauge, [&](const FunctorData& f) {
    std::set<std::string> objs, mors;
    for (const auto& [x, y] : f.obj_map) objs.insert(y);
    for (const auto& [m, n] : f.mor_map) mors.insert(n);
    if (objs.size() == b.objects.size() && mors.size() == b.morphisms.size()) {
      hit = f;
      found = true;
      return false;
    }
    return true;
  });
  if (found) return SearchResult<FunctorData>::hit(hit);
  if (!complete)
    return SearchResult<FunctorData>::over("functor budget exhausted after " +
                                           std::to_string(gauge.used) + " candidates");
  return SearchResult<FunctorData>::no("no invertible functor among all candidates");
}

inline FunctorData strict_inverse(const FunctorData& f) {
  FunctorData r{f.target, f.source, {}, {}};
  for (const auto& [x, y] : f.obj_map) {
    if (r.obj_map.count(y)) throw StructureError("strict_inverse: functor not injective on objects");
    r.obj_map[y] = x;
  }
  for (const auto& [m, n] : f.mor_map) {
    if (r.mor_map.count(n)) throw StructureError("strict_inverse: functor not injective on morphisms");
    r.mor_map[n] = m;
  }
  if (r.obj_map.size() != f.target.objects.size() || r.mor_map.size() != f.target.morphisms.size())
    throw StructureError("strict_inverse: functor not surjective");
  return r;
}

struct EquivalenceWitness {
  FunctorData forward;   // F : A -> B
  FunctorData backward;  // G : B -> A
  NatTransfData unit;    // Id_A => G.F
  NatTransfData counit;  // F.G => Id_B
};

// Full verification of an equivalence witness, independent of how it was found.
inline ValidationReport validate_equivalence_witness(const EquivalenceWitness& w) {
  ValidationReport rep;
  rep.structure = "equivalence-witness";
  rep.absorb(validate_functor(w.forward), "forward");
  rep.absorb(validate_functor(w.backward), "backward");
  rep.absorb(validate_nat(w.unit), "unit");
  rep.absorb(validate_nat(w.counit), "counit");
  if (!rep.ok()) {
    rep.sort_canonical();
    return rep;
  }
  if (!same_mapping(w.unit.source, identity_functor(w.forward.source)))
    rep.law("endpoints", {"unit"}, "Id on source", "other");
  if (!same_mapping(w.unit.target, compose_functors(w.backward, w.forward)))
    rep.law("endpoints", {"unit"}, "G.F", "other");
  if (!same_mapping(w.counit.source, compose_functors(w.forward, w.backward)))
    rep.law("endpoints", {"counit"}, "F.G", "other");
  if (!same_mapping(w.counit.target, identity_functor(w.forward.target)))
    rep.law("endpoints", {"counit"}, "Id on target", "other");
  if (!transf_invertible(w.unit)) rep.law("invertibility", {"unit"}, "iso components", "non-iso");
  if (!transf_invertible(w.counit)) rep.law("invertibility", {"counit"}, "iso components", "non-iso");
  rep.sort_canonical();
  return rep;
}

// Is the given functor full, faithful and essentially surjective?  On
// success builds a quasi-inverse and invertible unit/counit.
inline SearchResult<EquivalenceWitness> equivalence_witness_for(const FunctorData& f) {
  const FinCat& a = f.source;
  const FinCat& b = f.target;
  for (const auto& x : a.objects)
    for (const auto& y : a.objects) {
      std::map<std::string, int> image_count;
      for (const auto& m : a.morphisms)
        if (m.src == x && m.tgt == y) image_count[f.on_mor(m.id)]++;
      for (const auto& [im, n] : image_count)
        if (n > 1)
          return SearchResult<EquivalenceWitness>::no("faithfulness fails at hom(" + x + "," + y + ")");
      for (const auto& g : b.hom(f.on_obj(x), f.on_obj(y)))
        if (!image_count.count(g))
          return SearchResult<EquivalenceWitness>::no("fullness fails at hom(" + x + "," + y + ")");
    }
  // essential surjectivity: for each object of b pick the first iso to an image
  std::map<std::string, std::pair<std::string, std::string>> repr;  // b-object -> (a-object, iso)
  for (const auto& y : b.objects) {
    bool got = false;
    for (const auto& x : a.objects) {
      for (const auto& m : b.hom(f.on_obj(x), y)) {
        if (b.is_iso(m)) {
          repr[y] = {x, m};
          got = true;
          break;
        }
      }
      if (got) break;
    }
    if (!got)
      return SearchResult<EquivalenceWitness>::no("essential surjectivity fails at " + y);
  }
  // quasi-inverse G: y -> chosen x; on morphisms g : y -> y', G(g) is the unique
  // preimage of iso_{y'}^{-1} . g . iso_y under fullness+faithfulness.
  FunctorData g{b, a, {}, {}};
  for (const auto& y : b.objects) g.obj_map[y] = repr[y].first;
  for (const auto& m : b.morphisms) {
    const auto& [x0, i0] = repr[m.src];
    const auto& [x1, i1] = repr[m.tgt];
    std::string conj = b.comp(*b.inverse_of(i1), b.comp(m.id, i0));  // F(x0) -> F(x1)
    std::string pre;
    for (const auto& c : a.hom(x0, x1))
      if (f.on_mor(c) == conj) {
        pre = c;
        break;
      }
    if (pre.empty())
      return SearchResult<EquivalenceWitness>::no("fullness fails while building quasi-inverse at " +
                                                  m.id);
    g.mor_map[m.id] = pre;
  }
  // counit at y: iso_y : F(G(y)) -> y
  NatTransfData counit{compose_functors(f, g), identity_functor(b), {}};
  for (const auto& y : b.objects) counit.components[y] = repr[y].second;
  // unit at x: unique preimage of iso_{F x} : F(x) -> F(G(F x))
  NatTransfData unit{identity_functor(a), compose_functors(g, f), {}};
  for (const auto& x : a.objects) {
    std::string want = *b.inverse_of(repr[f.on_obj(x)].second);  // F x -> F(G(F x))
    std::string pre;
    for (const auto& c : a.hom(x, g.on_obj(f.on_obj(x))))
      if (f.on_mor(c) == want) {
        pre = c;
        break;
      }
    if (pre.empty())
      return SearchResult<EquivalenceWitness>::no("fullness fails while building unit at " + x);
    unit.components[x] = pre;
  }
  EquivalenceWitness w{f, g, unit, counit};
  ValidationReport check = validate_equivalence_witness(w);
  if (!check.ok())
    throw StructureError("equivalence_witness_for: constructed witness fails re-verification\n" +
                         check.render());
  return SearchResult<EquivalenceWitness>::hit(w);
}

inline SearchResult<EquivalenceWitness> check_equivalence(const FinCat& a, const FinCat& b,
                                                          const Budget& budget = {}) {
  BudgetGauge gauge{budget.functor_candidates};
  SearchResult<EquivalenceWitness> result =
      SearchResult<EquivalenceWitness>::no("no functor candidates");
  bool first = true;
  bool complete = for_each_functor(a, b, gauge, [&](const FunctorData& f) {
    auto r = equivalence_witness_for(f);
    if (r.found()) {
      result = r;
      return false;
    }
    if (first) {
      result = SearchResult<EquivalenceWitness>::no(r.reason);
      first = false;
    }
    return true;
  });
  if (result.found()) return result;
  if (!complete)
    return SearchResult<EquivalenceWitness>::over("functor budget exhausted after " +
                                                  std::to_string(gauge.used) + " candidates");
  if (a.objects.empty() && b.objects.empty())
    return equivalence_witness_for(identity_functor(a));
  if (a.objects.empty() != b.objects.empty())
    return SearchResult<EquivalenceWitness>::no("exactly one side is empty");
  return result;
}

// ---------------------------------------------------------------------------
// Small stock categories used across the library and its tests.
// ---------------------------------------------------------------------------

inline FinCat empty_category() {
  FinCat c;
  c.name = "0";
  return c;
}

inline FinCat terminal_category() {
  FinCat c;
  c.name = "1";
  c.objects = {"*"};
  c.morphisms = {{"1_*", "*", "*"}};
  c.identity["*"] = "1_*";
  c.table[{"1_*", "1_*"}] = "1_*";
  return c;
}

// chain_category(1) is the walking arrow 2; chain_category(n) the poset [n].
inline FinCat chain_category(int n) {
  FinCat c;
  c.name = n == 1 ? "2" : "chain" + std::to_string(n);
  for (int i = 0; i <= n; ++i) c.objects.push_back(std::to_string(i));
  for (int i = 0; i <= n; ++i) {
    std::string id = "id" + std::to_string(i);
    c.morphisms.push_back({id, std::to_string(i), std::to_string(i)});
    c.identity[std::to_string(i)] = id;
  }
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      c.morphisms.push_back(
          {"a_" + std::to_string(i) + "_" + std::to_string(j), std::to_string(i), std::to_string(j)});
  for (const auto& g : c.morphisms)
    for (const auto& f : c.morphisms) {
      if (f.tgt != g.src) continue;
      if (f.src == g.tgt)
        c.table[{g.id, f.id}] = c.identity[f.src];  // only i==j case
      else {
        const std::string& s = f.src;
        const std::string& t = g.tgt;
        c.table[{g.id, f.id}] = s == t ? c.identity[s] : "a_" + s + "_" + t;
      }
    }
  return c;
}

inline FinCat discrete_category(int n) {
  FinCat c;
  c.name = "disc" + std::to_string(n);
  for (int i = 0; i < n; ++i) {
    std::string x = "d" + std::to_string(i);
    c.objects.push_back(x);
    c.morphisms.push_back({"1_" + x, x, x});
    c.identity[x] = "1_" + x;
    c.table[{"1_" + x, "1_" + x}] = "1_" + x;
  }
  return c;
}

// The walking isomorphism: two objects, one iso pair.
inline FinCat walking_iso() {
  FinCat c;
  c.name = "I";
  c.objects = {"a", "b"};
  c.morphisms = {{"1_a", "a", "a"}, {"1_b", "b", "b"}, {"u", "a", "b"}, {"v", "b", "a"}};
  c.identity = {{"a", "1_a"}, {"b", "1_b"}};
  c.table[{"1_a", "1_a"}] = "1_a";
  c.table[{"1_b", "1_b"}] = "1_b";
  c.table[{"u", "1_a"}] = "u";
  c.table[{"1_b", "u"}] = "u";
  c.table[{"v", "1_b"}] = "v";
  c.table[{"1_a", "v"}] = "v";
  c.table[{"v", "u"}] = "1_a";
  c.table[{"u", "v"}] = "1_b";
  return c;
}

// The poset b -> a, b -> c; not isomorphic to its opposite.
inline FinCat wedge_category() {
  FinCat c;
  c.name = "wedge";
  c.objects = {"a", "b", "c"};
  for (const auto& x : c.objects) {
    c.morphisms.push_back({"1_" + x, x, x});
    c.identity[x] = "1_" + x;
  }
  c.morphisms.push_back({"p", "b", "a"});
  c.morphisms.push_back({"q", "b", "c"});
  for (const auto& g : c.morphisms)
    for (const auto& f : c.morphisms) {
      if (f.tgt != g.src) continue;
      std::string r;
      if (c.is_identity(f.id)) r = g.id;
      else if (c.is_identity(g.id)) r = f.id;
      if (!r.empty()) c.table[{g.id, f.id}] = r;
    }
  return c;
}

}  // namespace varcat

#endif
