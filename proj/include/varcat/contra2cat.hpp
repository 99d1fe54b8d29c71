#ifndef VARCAT_CONTRA2CAT_HPP
#define VARCAT_CONTRA2CAT_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "varcat/parallel.hpp"
#include "varcat/vmonoidal.hpp"

namespace varcat {

// ---------------------------------------------------------------------------
// Strict 2-categories with contravariance: variance-indexed hom categories
// A+(x,y), A-(x,y), units, and four composition functor families per object
// triple.  The family (outer h, inner g) has domain
//     hom(y,z)(h)  x  act_h( hom(x,y)(g) )
// and lands in hom(x,z)(gh).  Hom data is stored un-opped; the op appearing
// for h = - is realized by reading the inner argument through the op view,
// with morphism ids unchanged.
// ---------------------------------------------------------------------------

inline int comp_index(Variance outer, Variance inner) {
  return 2 * static_cast<int>(outer) + static_cast<int>(inner);
}

struct ContraTwoCat {
  std::string name;
  std::vector<std::string> objects;
  std::map<std::pair<std::string, std::string>, VObj> hom;
  std::map<std::string, std::string> unit;  // x -> object of hom(x,x).plus
  // (x|y|z) -> four functor families indexed by comp_index(outer, inner)
  std::map<std::string, std::array<FunctorData, 4>> comp;

  const VObj& hom_at(const std::string& x, const std::string& y) const {
    auto it = hom.find({x, y});
    if (it == hom.end()) throw StructureError("no hom for (" + x + "," + y + ") in " + name);
    return it->second;
  }
  const std::string& unit_of(const std::string& x) const {
    auto it = unit.find(x);
    if (it == unit.end()) throw StructureError("no unit for " + x + " in " + name);
    return it->second;
  }
  const FunctorData& comp_at(const std::string& x, const std::string& y, const std::string& z,
                             Variance outer, Variance inner) const {
    auto it = comp.find(key3(x, y, z));
    if (it == comp.end()) throw StructureError("no composition at (" + x + "," + y + "," + z + ")");
    return it->second[comp_index(outer, inner)];
  }

  // canonical domain of a composition family
  FinCat comp_domain(const std::string& x, const std::string& y, const std::string& z,
                     Variance outer, Variance inner) const {
    return product_category(hom_at(y, z).part(outer),
                            apply_variance(outer, hom_at(x, y).part(inner)));
  }

  // 1-cell composition: outer b in hom(y,z)(h), inner a in hom(x,y)(g)
  std::string comp1(const std::string& x, const std::string& y, const std::string& z,
                    Variance h, const std::string& b, Variance g, const std::string& a) const {
    return comp_at(x, y, z, h, g).on_obj(pair_id(b, a));
  }
  // 2-cell composition by morphism ids of the two hom parts
  std::string comp2(const std::string& x, const std::string& y, const std::string& z,
                    Variance h, const std::string& beta, Variance g,
                    const std::string& alpha) const {
    return comp_at(x, y, z, h, g).on_mor(pair_id(beta, alpha));
  }
};

// ---------------------------------------------------------------------------
// Validation: structural shape, then the 4 unitality families and the
// 8 associativity families of the definition, exhaustively.
// ---------------------------------------------------------------------------

inline ValidationReport validate_contra_2cat(const ContraTwoCat& a) {
  ValidationReport rep;
  rep.structure = "contra2cat:" + a.name;

  for (const auto& x : a.objects)
    for (const auto& y : a.objects) {
      auto it = a.hom.find({x, y});
      if (it == a.hom.end()) {
        rep.structural("hom", {x, y}, "missing hom");
        continue;
      }
      rep.absorb(validate_vobj(it->second), "hom(" + x + "," + y + ")");
    }
  for (const auto& x : a.objects) {
    auto it = a.unit.find(x);
    if (it == a.unit.end()) {
      rep.structural("unit", {x}, "missing unit");
      continue;
    }
    if (!rep.has_structural() && !a.hom_at(x, x).plus.has_object(it->second))
      rep.structural("unit", {x}, "unit is not an object of hom(x,x)+");
  }
  if (rep.has_structural()) {
    rep.sort_canonical();
    return rep;
  }
  for (const auto& x : a.objects)
    for (const auto& y : a.objects)
      for (const auto& z : a.objects) {
        auto it = a.comp.find(key3(x, y, z));
        if (it == a.comp.end()) {
          rep.structural("comp", {x, y, z}, "missing composition family");
          continue;
        }
        for (Variance h : all_variances())
          for (Variance g : all_variances()) {
            const FunctorData& f = it->second[comp_index(h, g)];
            if (!(f.source == a.comp_domain(x, y, z, h, g)))
              rep.structural("comp", {x, y, z, to_string(h), to_string(g)},
                             "family source is not the canonical product");
            else if (!(f.target == a.hom_at(x, z).part(g * h)))
              rep.structural("comp", {x, y, z, to_string(h), to_string(g)},
                             "family target is not hom(x,z)(gh)");
            else {
              ValidationReport fr = validate_functor(f);
              if (!fr.ok())
                rep.structural("comp", {x, y, z, to_string(h), to_string(g)},
                               "family is not a functor: " + fr.findings[0].render());
            }
          }
      }
  if (rep.has_structural()) {
    rep.sort_canonical();
    return rep;
  }

  // unitality: 2 * 2^1 families
  for (const auto& x : a.objects)
    for (const auto& y : a.objects)
      for (Variance g : all_variances()) {
        const FinCat& hcat = a.hom_at(x, y).part(g);
        const std::string& uy = a.unit_of(y);
        const std::string& ux = a.unit_of(x);
        const std::string uy2 = a.hom_at(y, y).plus.identity_of(uy);
        const std::string ux2 = a.hom_at(x, x).plus.identity_of(ux);
        std::string fam_l = "unit-left(" + std::string(to_string(g)) + ")";
        std::string fam_r = "unit-right(" + std::string(to_string(g)) + ")";
        for (const auto& c : hcat.objects) {
          std::string got = a.comp1(x, y, y, kPlus, uy, g, c);
          if (got != c) rep.law(fam_l, {x, y, c}, c, got);
          got = a.comp1(x, x, y, g, c, kPlus, ux);
          if (got != c) rep.law(fam_r, {x, y, c}, c, got);
        }
        for (const auto& m : hcat.morphisms) {
          std::string got = a.comp2(x, y, y, kPlus, uy2, g, m.id);
          if (got != m.id) rep.law(fam_l, {x, y, m.id}, m.id, got);
          got = a.comp2(x, x, y, g, m.id, kPlus, ux2);
          if (got != m.id) rep.law(fam_r, {x, y, m.id}, m.id, got);
        }
      }

  // associativity: 2^3 families, checked on 1-cell and 2-cell triples
  struct Tuple {
    std::string x, y, z, w;
    Variance g, h, k;
  };
  std::vector<Tuple> tuples;
  for (const auto& x : a.objects)
    for (const auto& y : a.objects)
      for (const auto& z : a.objects)
        for (const auto& w : a.objects)
          for (Variance g : all_variances())
            for (Variance h : all_variances())
              for (Variance k : all_variances()) tuples.push_back({x, y, z, w, g, h, k});

  std::vector<Finding> found = parallel_collect<Finding>(
      tuples.size(), [&](size_t i, std::vector<Finding>& out) {
        const Tuple& t = tuples[i];
        const FinCat& inner = a.hom_at(t.x, t.y).part(t.g);
        const FinCat& mid = a.hom_at(t.y, t.z).part(t.h);
        const FinCat& outer = a.hom_at(t.z, t.w).part(t.k);
        std::string fam = "assoc(" + std::string(to_string(t.k)) + "," + to_string(t.h) + "," +
                          to_string(t.g) + ")";
        for (const auto& ga : outer.objects)
          for (const auto& be : mid.objects)
            for (const auto& al : inner.objects) {
              std::string left = a.comp1(t.x, t.y, t.w, t.h * t.k,
                                         a.comp1(t.y, t.z, t.w, t.k, ga, t.h, be), t.g, al);
              std::string right = a.comp1(t.x, t.z, t.w, t.k, ga, t.g * t.h,
                                          a.comp1(t.x, t.y, t.z, t.h, be, t.g, al));
              if (left != right)
                out.push_back({fam, {t.x, t.y, t.z, t.w, ga, be, al}, left, right, false});
            }
        for (const auto& ga : outer.morphisms)
          for (const auto& be : mid.morphisms)
            for (const auto& al : inner.morphisms) {
              std::string left = a.comp2(t.x, t.y, t.w, t.h * t.k,
                                         a.comp2(t.y, t.z, t.w, t.k, ga.id, t.h, be.id), t.g, al.id);
              std::string right = a.comp2(t.x, t.z, t.w, t.k, ga.id, t.g * t.h,
                                          a.comp2(t.x, t.y, t.z, t.h, be.id, t.g, al.id));
              if (left != right)
                out.push_back({fam, {t.x, t.y, t.z, t.w, ga.id, be.id, al.id}, left, right, false});
            }
      });
  for (auto& f : found) rep.add(std::move(f));
  rep.sort_canonical();
  return rep;
}

// ---------------------------------------------------------------------------
// cat_sub: the finite full substructure of the self-enrichment of Cat.
//   A+(x,y) = Fun(x,y),  A-(x,y) = Fun(op(x), y),
// composition by functor composition with op conjugation on the inner
// argument when the outer cell is contravariant.
// ---------------------------------------------------------------------------

struct NamedCat {
  std::string name;
  FinCat cat;
};

// act on a functor: op on both sides, same assignments
inline FunctorData act_functor(Variance g, const FunctorData& f) {
  return is_minus(g) ? op_functor(f) : f;
}

// act on a transformation: for g = -, reverse between the op'd functors
inline NatTransfData act_transf(Variance g, const NatTransfData& t) {
  if (!is_minus(g)) return t;
  return {op_functor(t.target), op_functor(t.source), t.components};
}

inline ContraTwoCat cat_sub(const std::vector<NamedCat>& cats) {
  ContraTwoCat a;
  a.name = "catsub";
  std::map<std::string, FinCat> base;
  for (const auto& nc : cats) {
    a.objects.push_back(nc.name);
    base[nc.name] = nc.cat;
  }
  // rich functor categories for every hom and variance
  std::map<std::string, FunctorCategory> rich;  // key: x|y|g
  auto rich_at = [&](const std::string& x, const std::string& y, Variance g) -> FunctorCategory& {
    return rich[key3(x, y, to_string(g))];
  };
  for (const auto& x : a.objects)
    for (const auto& y : a.objects) {
      rich_at(x, y, kPlus) = functor_category(base[x], base[y]);
      rich_at(x, y, kMinus) = functor_category(op_category(base[x]), base[y]);
      a.hom[{x, y}] = VObj{rich_at(x, y, kPlus).cat, rich_at(x, y, kMinus).cat};
    }
  for (const auto& x : a.objects)
    a.unit[x] = rich_at(x, x, kPlus).id_of_functor(identity_functor(base[x]));

  for (const auto& x : a.objects)
    for (const auto& y : a.objects)
      for (const auto& z : a.objects) {
        std::array<FunctorData, 4> fam;
        for (Variance h : all_variances())
          for (Variance g : all_variances()) {
            const FunctorCategory& out_fc = rich_at(y, z, h);
            const FunctorCategory& in_fc = rich_at(x, y, g);
            FunctorCategory& tgt_fc = rich_at(x, z, g * h);
            FunctorData f{a.comp_domain(x, y, z, h, g), tgt_fc.cat, {}, {}};
            for (size_t i = 0; i < out_fc.functors.size(); ++i)
              for (size_t j = 0; j < in_fc.functors.size(); ++j) {
                FunctorData comp =
                    compose_functors(out_fc.functors[i], act_functor(h, in_fc.functors[j]));
                f.obj_map[pair_id(out_fc.cat.objects[i], in_fc.cat.objects[j])] =
                    tgt_fc.id_of_functor(comp);
              }
            for (size_t i = 0; i < out_fc.transfs.size(); ++i)
              for (size_t j = 0; j < in_fc.transfs.size(); ++j) {
                NatTransfData comp =
                    horizontal_compose(out_fc.transfs[i], act_transf(h, in_fc.transfs[j]));
                f.mor_map[pair_id(out_fc.cat.morphisms[i].id, in_fc.cat.morphisms[j].id)] =
                    tgt_fc.id_of_transf(comp);
              }
            fam[comp_index(h, g)] = f;
          }
        a.comp[key3(x, y, z)] = fam;
      }
  return a;
}

// Forgets all contravariant data.
inline ContraTwoCat underlying_2cat(const ContraTwoCat& a) {
  ContraTwoCat r;
  r.name = a.name + "+";
  r.objects = a.objects;
  r.unit = a.unit;
  for (const auto& [xy, v] : a.hom) r.hom[xy] = VObj{v.plus, empty_category()};
  for (const auto& x : a.objects)
    for (const auto& y : a.objects)
      for (const auto& z : a.objects) {
        std::array<FunctorData, 4> fam;
        for (Variance h : all_variances())
          for (Variance g : all_variances()) {
            FunctorData f{r.comp_domain(x, y, z, h, g), r.hom_at(x, z).part(g * h), {}, {}};
            if (h == kPlus && g == kPlus) {
              const FunctorData& orig = a.comp_at(x, y, z, kPlus, kPlus);
              f.obj_map = orig.obj_map;
              f.mor_map = orig.mor_map;
            }
            fam[comp_index(h, g)] = f;
          }
        r.comp[key3(x, y, z)] = fam;
      }
  return r;
}

inline bool contra_equal(const ContraTwoCat& a, const ContraTwoCat& b) {
  if (a.objects != b.objects || a.unit != b.unit) return false;
  if (a.hom.size() != b.hom.size() || a.comp.size() != b.comp.size()) return false;
  for (const auto& [k, v] : a.hom) {
    auto it = b.hom.find(k);
    if (it == b.hom.end() || !(it->second == v)) return false;
  }
  for (const auto& [k, fam] : a.comp) {
    auto it = b.comp.find(k);
    if (it == b.comp.end()) return false;
    for (int i = 0; i < 4; ++i)
      if (fam[i].obj_map != it->second[i].obj_map || fam[i].mor_map != it->second[i].mor_map)
        return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Structure-preserving functors and transformations
// ---------------------------------------------------------------------------

struct VarianceFunctor {
  ContraTwoCat source;
  ContraTwoCat target;
  std::map<std::string, std::string> obj_map;
  std::map<std::pair<std::string, std::string>, VMorphism> hom_maps;

  const std::string& on_obj(const std::string& x) const {
    auto it = obj_map.find(x);
    if (it == obj_map.end()) throw StructureError("variance functor: no image for " + x);
    return it->second;
  }
  const VMorphism& hom_map(const std::string& x, const std::string& y) const {
    auto it = hom_maps.find({x, y});
    if (it == hom_maps.end())
      throw StructureError("variance functor: no hom map for (" + x + "," + y + ")");
    return it->second;
  }
  std::string on_cell1(const std::string& x, const std::string& y, Variance g,
                       const std::string& c) const {
    return hom_map(x, y).part(g).on_obj(c);
  }
  std::string on_cell2(const std::string& x, const std::string& y, Variance g,
                       const std::string& c) const {
    return hom_map(x, y).part(g).on_mor(c);
  }
};

inline VarianceFunctor identity_variance_functor(const ContraTwoCat& a) {
  VarianceFunctor f{a, a, {}, {}};
  for (const auto& x : a.objects) f.obj_map[x] = x;
  for (const auto& x : a.objects)
    for (const auto& y : a.objects)
      f.hom_maps[{x, y}] = identity_vmorphism(a.hom_at(x, y));
  return f;
}

inline ValidationReport validate_variance_functor(const VarianceFunctor& f) {
  ValidationReport rep;
  rep.structure = "variance-functor";
  const ContraTwoCat& s = f.source;
  const ContraTwoCat& t = f.target;
  for (const auto& x : s.objects) {
    auto it = f.obj_map.find(x);
    if (it == f.obj_map.end()) {
      rep.structural("obj-map", {x}, "missing image");
      continue;
    }
    bool known = false;
    for (const auto& o : t.objects) known = known || o == it->second;
    if (!known) rep.structural("obj-map", {x}, "image is not an object");
  }
  if (rep.has_structural()) {
    rep.sort_canonical();
    return rep;
  }
  for (const auto& x : s.objects)
    for (const auto& y : s.objects) {
      auto it = f.hom_maps.find({x, y});
      if (it == f.hom_maps.end()) {
        rep.structural("hom-map", {x, y}, "missing hom map");
        continue;
      }
      const VMorphism& m = it->second;
      if (!(m.source == s.hom_at(x, y)) ||
          !(m.target == t.hom_at(f.on_obj(x), f.on_obj(y))))
        rep.structural("hom-map", {x, y}, "endpoints do not match");
      else
        rep.absorb(validate_vmorphism(m), "hom(" + x + "," + y + ")");
    }
  if (rep.has_structural()) {
    rep.sort_canonical();
    return rep;
  }
  for (const auto& x : s.objects)
    if (f.on_cell1(x, x, kPlus, s.unit_of(x)) != t.unit_of(f.on_obj(x)))
      rep.law("preserves-units", {x}, t.unit_of(f.on_obj(x)),
              f.on_cell1(x, x, kPlus, s.unit_of(x)));
  for (const auto& x : s.objects)
    for (const auto& y : s.objects)
      for (const auto& z : s.objects)
        for (Variance h : all_variances())
          for (Variance g : all_variances()) {
            std::string fam = "preserves-comp(" + std::string(to_string(h)) + "," +
                              std::string(to_string(g)) + ")";
            const FinCat& outer = s.hom_at(y, z).part(h);
            const FinCat& inner = s.hom_at(x, y).part(g);
            const std::string fx = f.on_obj(x), fy = f.on_obj(y), fz = f.on_obj(z);
            for (const auto& b : outer.objects)
              for (const auto& a2 : inner.objects) {
                std::string lhs = f.on_cell1(x, z, g * h, s.comp1(x, y, z, h, b, g, a2));
                std::string rhs = t.comp1(fx, fy, fz, h, f.on_cell1(y, z, h, b), g,
                                          f.on_cell1(x, y, g, a2));
                if (lhs != rhs) rep.law(fam, {x, y, z, b, a2}, lhs, rhs);
              }
            for (const auto& b : outer.morphisms)
              for (const auto& a2 : inner.morphisms) {
                std::string lhs = f.on_cell2(x, z, g * h, s.comp2(x, y, z, h, b.id, g, a2.id));
                std::string rhs = t.comp2(fx, fy, fz, h, f.on_cell2(y, z, h, b.id), g,
                                          f.on_cell2(x, y, g, a2.id));
                if (lhs != rhs) rep.law(fam, {x, y, z, b.id, a2.id}, lhs, rhs);
              }
          }
  rep.sort_canonical();
  return rep;
}

inline VarianceFunctor compose_variance_functors(const VarianceFunctor& g,
                                                 const VarianceFunctor& f) {
  VarianceFunctor r{f.source, g.target, {}, {}};
  for (const auto& [x, y] : f.obj_map) r.obj_map[x] = g.on_obj(y);
  for (const auto& [xy, m] : f.hom_maps)
    r.hom_maps[xy] =
        compose_vmorphisms(g.hom_map(f.on_obj(xy.first), f.on_obj(xy.second)), m);
  return r;
}

struct VarianceTransformation {
  VarianceFunctor source;  // F
  VarianceFunctor target;  // G
  std::map<std::string, std::string> components;  // x -> 1-cell in hom_T(Fx,Gx)+
};

inline ValidationReport validate_variance_transformation(const VarianceTransformation& tr) {
  ValidationReport rep;
  rep.structure = "variance-transformation";
  const ContraTwoCat& t = tr.source.target;
  const ContraTwoCat& s = tr.source.source;
  for (const auto& x : s.objects) {
    auto it = tr.components.find(x);
    if (it == tr.components.end()) {
      rep.structural("component", {x}, "missing component");
      continue;
    }
    const std::string fx = tr.source.on_obj(x), gx = tr.target.on_obj(x);
    if (!t.hom_at(fx, gx).plus.has_object(it->second))
      rep.structural("component", {x}, "component is not a covariant 1-cell");
  }
  if (rep.has_structural()) {
    rep.sort_canonical();
    return rep;
  }
  for (const auto& x : s.objects)
    for (const auto& y : s.objects)
      for (Variance g : all_variances()) {
        const FinCat& hcat = s.hom_at(x, y).part(g);
        const std::string fx = tr.source.on_obj(x), fy = tr.source.on_obj(y);
        const std::string gx = tr.target.on_obj(x), gy = tr.target.on_obj(y);
        std::string fam = "naturality(" + std::string(to_string(g)) + ")";
        for (const auto& u : hcat.objects) {
          // alpha_y . F(u) = G(u) . alpha_x, both g-variant Fx -> Gy
          std::string lhs =
              t.comp1(fx, fy, gy, kPlus, tr.components.at(y), g, tr.source.on_cell1(x, y, g, u));
          std::string rhs =
              t.comp1(fx, gx, gy, g, tr.target.on_cell1(x, y, g, u), kPlus, tr.components.at(x));
          if (lhs != rhs) rep.law(fam, {x, y, u}, lhs, rhs);
        }
        for (const auto& mu : hcat.morphisms) {
          const std::string idy = t.hom_at(fy, gy).plus.identity_of(tr.components.at(y));
          const std::string idx = t.hom_at(fx, gx).plus.identity_of(tr.components.at(x));
          std::string lhs =
              t.comp2(fx, fy, gy, kPlus, idy, g, tr.source.on_cell2(x, y, g, mu.id));
          std::string rhs =
              t.comp2(fx, gx, gy, g, tr.target.on_cell2(x, y, g, mu.id), kPlus, idx);
          if (lhs != rhs) rep.law(fam, {x, y, mu.id}, lhs, rhs);
        }
      }
  rep.sort_canonical();
  return rep;
}

// ---------------------------------------------------------------------------
// Cell calculus for the covariant fragment (a strict 2-category).  Used by
// the involution machinery, where pastings of whiskered 2-cells abound.
// ---------------------------------------------------------------------------

struct Cell1 {
  std::string src, tgt;  // objects
  std::string id;        // object of hom(src,tgt)+
};
inline bool operator==(const Cell1& a, const Cell1& b) {
  return a.src == b.src && a.tgt == b.tgt && a.id == b.id;
}
inline bool operator!=(const Cell1& a, const Cell1& b) { return !(a == b); }

struct Cell2 {
  std::string src, tgt;   // objects
  std::string from, to;   // 1-cell ids in hom(src,tgt)+
  std::string id;         // morphism of hom(src,tgt)+
};
inline bool operator==(const Cell2& a, const Cell2& b) {
  return a.src == b.src && a.tgt == b.tgt && a.from == b.from && a.to == b.to && a.id == b.id;
}
inline bool operator!=(const Cell2& a, const Cell2& b) { return !(a == b); }

struct CellCalc {
  const ContraTwoCat& k;

  Cell1 id1(const std::string& x) const { return {x, x, k.unit_of(x)}; }
  Cell2 id2(const Cell1& f) const {
    const FinCat& h = k.hom_at(f.src, f.tgt).plus;
    return {f.src, f.tgt, f.id, f.id, h.identity_of(f.id)};
  }
  Cell2 cell2(const std::string& x, const std::string& y, const std::string& mor) const {
    const Mor& m = k.hom_at(x, y).plus.mor(mor);
    return {x, y, m.src, m.tgt, mor};
  }
  Cell1 comp1(const Cell1& g, const Cell1& f) const {
    if (f.tgt != g.src) throw StructureError("comp1: endpoint mismatch");
    return {f.src, g.tgt, k.comp1(f.src, f.tgt, g.tgt, kPlus, g.id, kPlus, f.id)};
  }
  Cell2 vcomp(const Cell2& b, const Cell2& a) const {
    if (a.src != b.src || a.tgt != b.tgt || a.to != b.from)
      throw StructureError("vcomp: endpoint mismatch (" + a.id + " then " + b.id + ")");
    const FinCat& h = k.hom_at(a.src, a.tgt).plus;
    return {a.src, a.tgt, a.from, b.to, h.comp(b.id, a.id)};
  }
  // h . alpha for a 1-cell h after the 2-cell alpha
  Cell2 whisk_post(const Cell1& h, const Cell2& a) const {
    if (a.tgt != h.src) throw StructureError("whisk_post: endpoint mismatch");
    const FinCat& hc = k.hom_at(h.src, h.tgt).plus;
    std::string img = k.comp2(a.src, a.tgt, h.tgt, kPlus, hc.identity_of(h.id), kPlus, a.id);
    const Mor& m = k.hom_at(a.src, h.tgt).plus.mor(img);
    return {a.src, h.tgt, m.src, m.tgt, img};
  }
  // alpha . f for a 2-cell alpha after the 1-cell f
  Cell2 whisk_pre(const Cell2& a, const Cell1& f) const {
    if (f.tgt != a.src) throw StructureError("whisk_pre: endpoint mismatch");
    const FinCat& fc = k.hom_at(f.src, f.tgt).plus;
    std::string img = k.comp2(f.src, f.tgt, a.tgt, kPlus, a.id, kPlus, fc.identity_of(f.id));
    const Mor& m = k.hom_at(f.src, a.tgt).plus.mor(img);
    return {f.src, a.tgt, m.src, m.tgt, img};
  }
  Cell2 hcomp(const Cell2& b, const Cell2& a) const {
    Cell1 bs{b.src, b.tgt, b.from};
    Cell1 at{a.src, a.tgt, a.to};
    return vcomp(whisk_pre(b, at), whisk_post(bs, a));
  }
  Cell2 inverse2(const Cell2& a) const {
    const FinCat& h = k.hom_at(a.src, a.tgt).plus;
    auto inv = h.inverse_of(a.id);
    if (!inv) throw StructureError("inverse2: 2-cell " + a.id + " is not invertible");
    return {a.src, a.tgt, a.to, a.from, *inv};
  }
  bool invertible2(const Cell2& a) const { return k.hom_at(a.src, a.tgt).plus.is_iso(a.id); }
};

}  // namespace varcat

#endif
