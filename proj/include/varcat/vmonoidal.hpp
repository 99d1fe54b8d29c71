#ifndef VARCAT_VMONOIDAL_HPP
#define VARCAT_VMONOIDAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "varcat/fincat.hpp"

namespace varcat {

// ---------------------------------------------------------------------------
// V: pairs of finite categories with the twisted (non-symmetric) tensor.
// The underlying category is Cat x Cat; objects are written A = (A+, A-).
// ---------------------------------------------------------------------------

struct VObj {
  FinCat plus;   // covariant part
  FinCat minus;  // contravariant part

  const FinCat& part(Variance g) const { return is_minus(g) ? minus : plus; }
  FinCat& part(Variance g) { return is_minus(g) ? minus : plus; }
};

inline bool operator==(const VObj& a, const VObj& b) {
  return a.plus == b.plus && a.minus == b.minus;
}
inline bool operator!=(const VObj& a, const VObj& b) { return !(a == b); }

inline ValidationReport validate_vobj(const VObj& v) {
  ValidationReport rep;
  rep.structure = "vobj";
  rep.absorb(validate_category(v.plus), "+");
  rep.absorb(validate_category(v.minus), "-");
  rep.sort_canonical();
  return rep;
}

struct VMorphism {
  VObj source;
  VObj target;
  FunctorData plus_part;
  FunctorData minus_part;

  const FunctorData& part(Variance g) const { return is_minus(g) ? minus_part : plus_part; }
  FunctorData& part(Variance g) { return is_minus(g) ? minus_part : plus_part; }
};

inline bool same_vmorphism(const VMorphism& a, const VMorphism& b) {
  return same_mapping(a.plus_part, b.plus_part) && same_mapping(a.minus_part, b.minus_part);
}

inline ValidationReport validate_vmorphism(const VMorphism& m) {
  ValidationReport rep;
  rep.structure = "vmorphism";
  if (!(m.plus_part.source == m.source.plus) || !(m.plus_part.target == m.target.plus))
    rep.structural("endpoints", {"+"}, "plus part does not match declared endpoints");
  if (!(m.minus_part.source == m.source.minus) || !(m.minus_part.target == m.target.minus))
    rep.structural("endpoints", {"-"}, "minus part does not match declared endpoints");
  rep.absorb(validate_functor(m.plus_part), "+");
  rep.absorb(validate_functor(m.minus_part), "-");
  rep.sort_canonical();
  return rep;
}

inline VMorphism identity_vmorphism(const VObj& a) {
  return {a, a, identity_functor(a.plus), identity_functor(a.minus)};
}

inline VMorphism compose_vmorphisms(const VMorphism& g, const VMorphism& f) {
  return {f.source, g.target, compose_functors(g.plus_part, f.plus_part),
          compose_functors(g.minus_part, f.minus_part)};
}

// A 2-cell between parallel V-morphisms: a pair of natural transformations.
struct VNat {
  NatTransfData plus;
  NatTransfData minus;
};

inline bool vnat_invertible(const VNat& n) {
  return transf_invertible(n.plus) && transf_invertible(n.minus);
}

// ---------------------------------------------------------------------------
// Units.  unit() = (1, 0); twisted_unit(-) = (0, 1).
// ---------------------------------------------------------------------------

inline VObj unit_vobj() { return {terminal_category(), empty_category()}; }

inline VObj twisted_unit(Variance g) {
  return is_minus(g) ? VObj{empty_category(), terminal_category()} : unit_vobj();
}

// ---------------------------------------------------------------------------
// Tensor.  (A .x. B)(g) = SUM_{g1.g2 = g}  A(g1) x act_{g1}(B(g2)),
// with summands in the order g1 = +, then g1 = -.  Tags are canonical:
// the g1 = + summand is "inl:", the g1 = - summand "inr:".
// ---------------------------------------------------------------------------

inline std::string tensor_cell_id(Variance g1, const std::string& a, const std::string& b) {
  return is_minus(g1) ? inr_id(pair_id(a, b)) : inl_id(pair_id(a, b));
}

struct TensorEntry {
  Variance g1;     // variance of the A factor (selects the summand)
  std::string a;   // cell of A(g1)
  std::string b;   // cell of B(g1*g)  (read through op when g1 = -)
  std::string id;  // cell id inside the tensor part
};

inline std::vector<TensorEntry> tensor_objects(const VObj& a, const VObj& b, Variance g) {
  std::vector<TensorEntry> out;
  for (Variance g1 : all_variances()) {
    Variance g2 = g1 * g;
    for (const auto& x : a.part(g1).objects)
      for (const auto& y : b.part(g2).objects)
        out.push_back({g1, x, y, tensor_cell_id(g1, x, y)});
  }
  return out;
}

inline std::vector<TensorEntry> tensor_morphisms(const VObj& a, const VObj& b, Variance g) {
  std::vector<TensorEntry> out;
  for (Variance g1 : all_variances()) {
    Variance g2 = g1 * g;
    for (const auto& f : a.part(g1).morphisms)
      for (const auto& h : b.part(g2).morphisms)
        out.push_back({g1, f.id, h.id, tensor_cell_id(g1, f.id, h.id)});
  }
  return out;
}

inline VObj tensor(const VObj& a, const VObj& b) {
  VObj r;
  for (Variance g : all_variances()) {
    FinCat s0 = product_category(a.plus, apply_variance(kPlus, b.part(kPlus * g)));
    FinCat s1 = product_category(a.minus, apply_variance(kMinus, b.part(kMinus * g)));
    r.part(g) = coproduct_category(s0, s1);
    r.part(g).name = "(Ax B)(" + std::string(to_string(g)) + ")";
  }
  r.plus.name = "tensor+";
  r.minus.name = "tensor-";
  return r;
}

// Tensor of morphisms: componentwise on canonical cells.
inline VMorphism tensor_mor(const VMorphism& f, const VMorphism& g) {
  VObj src = tensor(f.source, g.source);
  VObj tgt = tensor(f.target, g.target);
  VMorphism r{src, tgt, {src.plus, tgt.plus, {}, {}}, {src.minus, tgt.minus, {}, {}}};
  for (Variance v : all_variances()) {
    FunctorData& p = r.part(v);
    for (const auto& e : tensor_objects(f.source, g.source, v)) {
      Variance g2 = e.g1 * v;
      p.obj_map[e.id] = tensor_cell_id(e.g1, f.part(e.g1).on_obj(e.a), g.part(g2).on_obj(e.b));
    }
    for (const auto& e : tensor_morphisms(f.source, g.source, v)) {
      Variance g2 = e.g1 * v;
      p.mor_map[e.id] = tensor_cell_id(e.g1, f.part(e.g1).on_mor(e.a), g.part(g2).on_mor(e.b));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Biclosed homs.  Both emit the formula expansion they used.
//
//   (B \homr C)(g) = PROD_h  Fun(act_g(B(h)), C(gh))        (right hom)
//   (A \homl C)(g) = PROD_h  Fun(act_h(A(h)), act_h(C(hg))) (left hom; h = h^-1)
//
// The two factors are ordered h = +, then h = -.
// ---------------------------------------------------------------------------

struct HomResult {
  VObj vobj;
  // factor functor-categories, indexed [variance g][factor h]
  FunctorCategory factor[2][2];
  std::vector<std::string> expansion;  // human-readable trace of the formula used

  const FunctorCategory& fac(Variance g, Variance h) const {
    return factor[static_cast<int>(g)][static_cast<int>(h)];
  }
};

inline std::string describe_part(const char* name, Variance h, bool opped) {
  std::string s = std::string(name) + std::string(to_string(h));
  return opped ? "op(" + s + ")" : s;
}

inline HomResult right_hom(const VObj& b, const VObj& c) {
  HomResult r;
  for (Variance g : all_variances()) {
    std::string line = "(B\\C)(" + std::string(to_string(g)) + ") = ";
    for (Variance h : all_variances()) {
      Variance gh = g * h;
      r.factor[static_cast<int>(g)][static_cast<int>(h)] =
          functor_category(apply_variance(g, b.part(h)), c.part(gh));
      if (is_minus(h)) line += " x ";
      line += "Fun(" + describe_part("B", h, is_minus(g)) + "," +
              describe_part("C", gh, false) + ")";
    }
    r.vobj.part(g) = product_category(r.fac(g, kPlus).cat, r.fac(g, kMinus).cat);
    r.expansion.push_back(line);
  }
  return r;
}

inline HomResult left_hom(const VObj& a, const VObj& c) {
  HomResult r;
  for (Variance g : all_variances()) {
    std::string line = "(A/C)(" + std::string(to_string(g)) + ") = ";
    for (Variance h : all_variances()) {
      Variance hg = h * g;
      r.factor[static_cast<int>(g)][static_cast<int>(h)] =
          functor_category(apply_variance(h, a.part(h)), apply_variance(h, c.part(hg)));
      if (is_minus(h)) line += " x ";
      line += "Fun(" + describe_part("A", h, is_minus(h)) + "," +
              describe_part("C", hg, is_minus(h)) + ")";
    }
    r.vobj.part(g) = product_category(r.fac(g, kPlus).cat, r.fac(g, kMinus).cat);
    r.expansion.push_back(line);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration of V-morphisms.
// ---------------------------------------------------------------------------

inline SearchResult<std::vector<VMorphism>> enumerate_vmorphisms(const VObj& a, const VObj& b,
                                                                 BudgetGauge& gauge) {
  std::vector<VMorphism> out;
  std::vector<FunctorData> plus, minus;
  bool ok = for_each_functor(a.plus, b.plus, gauge, [&](const FunctorData& f) {
    plus.push_back(f);
    return true;
  });
  if (!ok) return SearchResult<std::vector<VMorphism>>::over("plus-part enumeration over budget");
  ok = for_each_functor(a.minus, b.minus, gauge, [&](const FunctorData& f) {
    minus.push_back(f);
    return true;
  });
  if (!ok) return SearchResult<std::vector<VMorphism>>::over("minus-part enumeration over budget");
  for (const auto& p : plus)
    for (const auto& m : minus) out.push_back({a, b, p, m});
  return SearchResult<std::vector<VMorphism>>::hit(out);
}

// ---------------------------------------------------------------------------
// Adjunction transposes.  V(A@B, C) ~ V(A, B\C) ~ V(B, A/C).  Both
// directions are emitted explicitly for each adjunction.
// ---------------------------------------------------------------------------

// m : A@B -> C   |->   n : A -> B\C
inline VMorphism transpose_right(const VObj& a, const VObj& b, const VObj& c, const HomResult& bc,
                                 const VMorphism& m) {
  VMorphism n{a, bc.vobj, {a.plus, bc.vobj.plus, {}, {}}, {a.minus, bc.vobj.minus, {}, {}}};
  for (Variance g : all_variances()) {
    FunctorData& np = n.part(g);
    for (const auto& x : a.part(g).objects) {
      std::string factors[2];
      for (Variance h : all_variances()) {
        Variance gh = g * h;
        const FunctorCategory& fac = bc.fac(g, h);
        FunctorData fd{apply_variance(g, b.part(h)), c.part(gh), {}, {}};
        for (const auto& y : b.part(h).objects)
          fd.obj_map[y] = m.part(gh).on_obj(tensor_cell_id(g, x, y));
        for (const auto& bm : b.part(h).morphisms)
          fd.mor_map[bm.id] =
              m.part(gh).on_mor(tensor_cell_id(g, a.part(g).identity_of(x), bm.id));
        factors[static_cast<int>(h)] = fac.id_of_functor(fd);
      }
      np.obj_map[x] = pair_id(factors[0], factors[1]);
    }
    for (const auto& am : a.part(g).morphisms) {
      std::string factors[2];
      auto split = [](const std::string& pid, Variance hh) {
        // pid = pr:(f0,f1): pick factor hh
        size_t comma = pid.find(',');
        std::string f0 = pid.substr(4, comma - 4);
        std::string f1 = pid.substr(comma + 1, pid.size() - comma - 2);
        return is_minus(hh) ? f1 : f0;
      };
      for (Variance h : all_variances()) {
        Variance gh = g * h;
        const FunctorCategory& fac = bc.fac(g, h);
        std::map<std::string, std::string> comps;  // component at y: image of (am, 1_y)
        for (const auto& y : b.part(h).objects)
          comps[y] = m.part(gh).on_mor(tensor_cell_id(g, am.id, b.part(h).identity_of(y)));
        NatTransfData t{fac.functor_of(split(np.obj_map.at(am.src), h)),
                        fac.functor_of(split(np.obj_map.at(am.tgt), h)), comps};
        factors[static_cast<int>(h)] = fac.id_of_transf(t);
      }
      np.mor_map[am.id] = pair_id(factors[0], factors[1]);
    }
  }
  return n;
}

// n : A -> B\C   |->   m : A@B -> C
inline VMorphism untranspose_right(const VObj& a, const VObj& b, const VObj& c,
                                   const HomResult& bc, const VMorphism& n) {
  VObj ab = tensor(a, b);
  VMorphism m{ab, c, {ab.plus, c.plus, {}, {}}, {ab.minus, c.minus, {}, {}}};
  auto split = [](const std::string& pid, Variance hh) {
    size_t comma = pid.find(',');
    std::string f0 = pid.substr(4, comma - 4);
    std::string f1 = pid.substr(comma + 1, pid.size() - comma - 2);
    return is_minus(hh) ? f1 : f0;
  };
  for (Variance k : all_variances()) {
    FunctorData& mp = m.part(k);
    for (const auto& e : tensor_objects(a, b, k)) {
      Variance g1 = e.g1, h = g1 * k;
      const FunctorCategory& fac = bc.fac(g1, h);
      mp.obj_map[e.id] = fac.functor_of(split(n.part(g1).on_obj(e.a), h)).on_obj(e.b);
    }
    for (const auto& e : tensor_morphisms(a, b, k)) {
      Variance g1 = e.g1, h = g1 * k;
      const FunctorCategory& fac = bc.fac(g1, h);
      const Mor& am = a.part(g1).mor(e.a);
      // image of (alpha, beta) = component of n(alpha) at tgt(beta) after
      // functor-image of beta; both orders agree by naturality
      const NatTransfData& t = fac.transf_of(split(n.part(g1).on_mor(e.a), h));
      const FunctorData& fsrc = fac.functor_of(split(n.part(g1).on_obj(am.src), h));
      const FinCat& bcat = apply_variance(g1, b.part(h));
      const Mor& bm = bcat.mor(e.b);
      mp.mor_map[e.id] = c.part(k).comp(t.at(bm.tgt), fsrc.on_mor(e.b));
    }
  }
  return m;
}

// m : A@B -> C   |->   n : B -> A/C
inline VMorphism transpose_left(const VObj& a, const VObj& b, const VObj& c, const HomResult& ac,
                                const VMorphism& m) {
  VMorphism n{b, ac.vobj, {b.plus, ac.vobj.plus, {}, {}}, {b.minus, ac.vobj.minus, {}, {}}};
  for (Variance g : all_variances()) {
    FunctorData& np = n.part(g);
    for (const auto& y : b.part(g).objects) {
      std::string factors[2];
      for (Variance h : all_variances()) {
        Variance hg = h * g;
        const FunctorCategory& fac = ac.fac(g, h);
        FunctorData fd{apply_variance(h, a.part(h)), apply_variance(h, c.part(hg)), {}, {}};
        for (const auto& x : a.part(h).objects)
          fd.obj_map[x] = m.part(hg).on_obj(tensor_cell_id(h, x, y));
        for (const auto& amr : a.part(h).morphisms)
          fd.mor_map[amr.id] =
              m.part(hg).on_mor(tensor_cell_id(h, amr.id, b.part(g).identity_of(y)));
        factors[static_cast<int>(h)] = fac.id_of_functor(fd);
      }
      np.obj_map[y] = pair_id(factors[0], factors[1]);
    }
    for (const auto& bm : b.part(g).morphisms) {
      std::string factors[2];
      auto split = [](const std::string& pid, Variance hh) {
        size_t comma = pid.find(',');
        std::string f0 = pid.substr(4, comma - 4);
        std::string f1 = pid.substr(comma + 1, pid.size() - comma - 2);
        return is_minus(hh) ? f1 : f0;
      };
      for (Variance h : all_variances()) {
        Variance hg = h * g;
        const FunctorCategory& fac = ac.fac(g, h);
        std::map<std::string, std::string> comps;
        for (const auto& x : a.part(h).objects)
          comps[x] = m.part(hg).on_mor(tensor_cell_id(h, a.part(h).identity_of(x), bm.id));
        NatTransfData t{fac.functor_of(split(np.obj_map.at(bm.src), h)),
                        fac.functor_of(split(np.obj_map.at(bm.tgt), h)), comps};
        factors[static_cast<int>(h)] = fac.id_of_transf(t);
      }
      np.mor_map[bm.id] = pair_id(factors[0], factors[1]);
    }
  }
  return n;
}

// n : B -> A/C   |->   m : A@B -> C
inline VMorphism untranspose_left(const VObj& a, const VObj& b, const VObj& c, const HomResult& ac,
                                  const VMorphism& n) {
  VObj ab = tensor(a, b);
  VMorphism m{ab, c, {ab.plus, c.plus, {}, {}}, {ab.minus, c.minus, {}, {}}};
  auto split = [](const std::string& pid, Variance hh) {
    size_t comma = pid.find(',');
    std::string f0 = pid.substr(4, comma - 4);
    std::string f1 = pid.substr(comma + 1, pid.size() - comma - 2);
    return is_minus(hh) ? f1 : f0;
  };
  for (Variance k : all_variances()) {
    FunctorData& mp = m.part(k);
    for (const auto& e : tensor_objects(a, b, k)) {
      Variance h = e.g1, g = h * k;  // b-cell lives in B(g); factor index is h
      const FunctorCategory& fac = ac.fac(g, h);
      mp.obj_map[e.id] = fac.functor_of(split(n.part(g).on_obj(e.b), h)).on_obj(e.a);
    }
    for (const auto& e : tensor_morphisms(a, b, k)) {
      Variance h = e.g1, g = h * k;
      const FunctorCategory& fac = ac.fac(g, h);
      const FinCat& bcat = apply_variance(h, b.part(g));
      const Mor& bm = bcat.mor(e.b);
      const FinCat& acat = apply_variance(h, a.part(h));
      const Mor& amv = acat.mor(e.a);
      const NatTransfData& t = fac.transf_of(split(n.part(g).on_mor(e.b), h));
      // G is the functor at the plain source of beta; in the factor-target
      // category the image is t_{tgt(alpha)} composed after G(alpha), with
      // endpoints read in the act_h world throughout
      const std::string& b_plain_src = is_minus(h) ? bm.tgt : bm.src;
      const FunctorData& fsrc = fac.functor_of(split(n.part(g).on_obj(b_plain_src), h));
      mp.mor_map[e.id] = fsrc.target.comp(t.at(amv.tgt), fsrc.on_mor(e.a));
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Structural isomorphisms: associator and unitors, all bijective retaggings.
// ---------------------------------------------------------------------------

inline VMorphism associator(const VObj& a, const VObj& b, const VObj& c) {
  VObj ab = tensor(a, b);
  VObj bc = tensor(b, c);
  VObj lhs = tensor(ab, c);
  VObj rhs = tensor(a, bc);
  VMorphism m{lhs, rhs, {lhs.plus, rhs.plus, {}, {}}, {lhs.minus, rhs.minus, {}, {}}};
  for (Variance g : all_variances()) {
    FunctorData& mp = m.part(g);
    for (Variance h1 : all_variances())
      for (Variance h2 : all_variances()) {
        Variance g12 = h1 * h2;     // variance of the (a,b) cell
        Variance g3 = g12 * g;      // variance of the c cell
        Variance g23 = h2 * g3;     // variance of the (b,c) cell
        auto add = [&](const std::vector<std::string>& xs, const std::vector<std::string>& ys,
                       const std::vector<std::string>& zs, bool mor) {
          for (const auto& x : xs)
            for (const auto& y : ys)
              for (const auto& z : zs) {
                std::string from = tensor_cell_id(g12, tensor_cell_id(h1, x, y), z);
                std::string to = tensor_cell_id(h1, x, tensor_cell_id(h2, y, z));
                if (mor)
                  mp.mor_map[from] = to;
                else
                  mp.obj_map[from] = to;
              }
        };
        std::vector<std::string> am, bm, cm;
        for (const auto& mm : a.part(h1).morphisms) am.push_back(mm.id);
        for (const auto& mm : b.part(h2).morphisms) bm.push_back(mm.id);
        for (const auto& mm : c.part(g3).morphisms) cm.push_back(mm.id);
        add(a.part(h1).objects, b.part(h2).objects, c.part(g3).objects, false);
        add(am, bm, cm, true);
        (void)g23;
      }
  }
  return m;
}

inline VMorphism left_unitor(const VObj& a) {
  VObj src = tensor(unit_vobj(), a);
  VMorphism m{src, a, {src.plus, a.plus, {}, {}}, {src.minus, a.minus, {}, {}}};
  for (Variance g : all_variances()) {
    for (const auto& e : tensor_objects(unit_vobj(), a, g)) m.part(g).obj_map[e.id] = e.b;
    for (const auto& e : tensor_morphisms(unit_vobj(), a, g)) m.part(g).mor_map[e.id] = e.b;
  }
  return m;
}

inline VMorphism right_unitor(const VObj& a) {
  VObj src = tensor(a, unit_vobj());
  VMorphism m{src, a, {src.plus, a.plus, {}, {}}, {src.minus, a.minus, {}, {}}};
  for (Variance g : all_variances()) {
    for (const auto& e : tensor_objects(a, unit_vobj(), g)) m.part(g).obj_map[e.id] = e.a;
    for (const auto& e : tensor_morphisms(a, unit_vobj(), g)) m.part(g).mor_map[e.id] = e.a;
  }
  return m;
}

inline VMorphism invert_vmorphism(const VMorphism& m) {
  return {m.target, m.source, strict_inverse(m.plus_part), strict_inverse(m.minus_part)};
}

// Constructive isomorphism tensor(tu(g), tu(h)) -> tu(gh); everything in
// sight has at most one cell per part.
inline VMorphism twisted_unit_mult_iso(Variance g, Variance h) {
  VObj src = tensor(twisted_unit(g), twisted_unit(h));
  VObj tgt = twisted_unit(g * h);
  VMorphism m{src, tgt, {src.plus, tgt.plus, {}, {}}, {src.minus, tgt.minus, {}, {}}};
  for (Variance v : all_variances()) {
    for (const auto& x : src.part(v).objects) m.part(v).obj_map[x] = "*";
    for (const auto& f : src.part(v).morphisms) m.part(v).mor_map[f.id] = "1_*";
  }
  return m;
}

// ---------------------------------------------------------------------------
// Dualizability certificates.
// ---------------------------------------------------------------------------

struct DualityPair {
  VObj object;
  VObj dual;
  VMorphism eta;  // 1 -> object @ dual
  VMorphism eps;  // dual @ object -> 1
  // recorded zig-zag composites and the invertible 2-data connecting them
  // to the identities; for twisted units these are identities on the nose
  VMorphism triangle_object;  // endo of object
  VMorphism triangle_dual;    // endo of dual
  VNat triangle_object_wit;   // triangle_object => id
  VNat triangle_dual_wit;     // triangle_dual => id
};

// (1 @ eps) . assoc . (eta @ 1) conjugated by unitors, and dually.
inline VMorphism zigzag_object(const VObj& a, const VObj& d, const VMorphism& eta,
                               const VMorphism& eps) {
  VMorphism step1 = tensor_mor(eta, identity_vmorphism(a));           // 1@A -> (A@D)@A
  VMorphism step2 = associator(a, d, a);                              // -> A@(D@A)
  VMorphism step3 = tensor_mor(identity_vmorphism(a), eps);           // -> A@1
  VMorphism lu = left_unitor(a);
  VMorphism ru = right_unitor(a);
  return compose_vmorphisms(
      ru, compose_vmorphisms(step3, compose_vmorphisms(step2, compose_vmorphisms(
                                          step1, invert_vmorphism(lu)))));
}

inline VMorphism zigzag_dual(const VObj& a, const VObj& d, const VMorphism& eta,
                             const VMorphism& eps) {
  VMorphism step1 = tensor_mor(identity_vmorphism(d), eta);           // D@1 -> D@(A@D)
  VMorphism step2 = invert_vmorphism(associator(d, a, d));            // -> (D@A)@D
  VMorphism step3 = tensor_mor(eps, identity_vmorphism(d));           // -> 1@D
  VMorphism ru = right_unitor(d);
  VMorphism lu = left_unitor(d);
  return compose_vmorphisms(
      lu, compose_vmorphisms(step3, compose_vmorphisms(step2, compose_vmorphisms(
                                         step1, invert_vmorphism(ru)))));
}

inline std::optional<VNat> find_invertible_vnat_to_identity(const VMorphism& m) {
  const VObj& a = m.source;
  std::optional<NatTransfData> p, q;
  for_each_nat(m.plus_part, identity_functor(a.plus), [&](const NatTransfData& t) {
    if (transf_invertible(t)) {
      p = t;
      return false;
    }
    return true;
  });
  if (!p && a.plus.objects.empty()) p = NatTransfData{m.plus_part, identity_functor(a.plus), {}};
  for_each_nat(m.minus_part, identity_functor(a.minus), [&](const NatTransfData& t) {
    if (transf_invertible(t)) {
      q = t;
      return false;
    }
    return true;
  });
  if (!q && a.minus.objects.empty())
    q = NatTransfData{m.minus_part, identity_functor(a.minus), {}};
  if (p && q) return VNat{*p, *q};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Adjunction verification: V(A@B, C) ~ V(A, B\C) ~ V(B, A/C) as exact
// bijections of morphism sets, with both transpose directions exercised
// on every element.
// ---------------------------------------------------------------------------

inline ValidationReport verify_adjunctions(const VObj& a, const VObj& b, const VObj& c,
                                           const Budget& budget = {}) {
  ValidationReport rep;
  rep.structure = "adjunction(A,B,C)";
  VObj ab = tensor(a, b);
  HomResult bc = right_hom(b, c);
  HomResult ac = left_hom(a, c);

  BudgetGauge gauge{budget.functor_candidates};
  auto ms = enumerate_vmorphisms(ab, c, gauge);
  auto ns = enumerate_vmorphisms(a, bc.vobj, gauge);
  auto ps = enumerate_vmorphisms(b, ac.vobj, gauge);
  if (ms.budget_exceeded() || ns.budget_exceeded() || ps.budget_exceeded()) {
    rep.budget_notes.push_back("enumeration budget exhausted");
    return rep;
  }
  if (ms.value.size() != ns.value.size())
    rep.law("right-adjunction-count", {}, std::to_string(ms.value.size()),
            std::to_string(ns.value.size()));
  if (ms.value.size() != ps.value.size())
    rep.law("left-adjunction-count", {}, std::to_string(ms.value.size()),
            std::to_string(ps.value.size()));

  auto contains = [](const std::vector<VMorphism>& set, const VMorphism& x) {
    for (const auto& e : set)
      if (same_vmorphism(e, x)) return true;
    return false;
  };

  for (size_t i = 0; i < ms.value.size(); ++i) {
    VMorphism n = transpose_right(a, b, c, bc, ms.value[i]);
    if (!contains(ns.value, n))
      rep.law("right-transpose-lands", {std::to_string(i)}, "member of V(A,B\\C)", "missing");
    VMorphism back = untranspose_right(a, b, c, bc, n);
    if (!same_vmorphism(back, ms.value[i]))
      rep.law("right-round-trip", {std::to_string(i)}, "identity", "differs");
    VMorphism p = transpose_left(a, b, c, ac, ms.value[i]);
    if (!contains(ps.value, p))
      rep.law("left-transpose-lands", {std::to_string(i)}, "member of V(B,A/C)", "missing");
    VMorphism back2 = untranspose_left(a, b, c, ac, p);
    if (!same_vmorphism(back2, ms.value[i]))
      rep.law("left-round-trip", {std::to_string(i)}, "identity", "differs");
  }
  for (size_t j = 0; j < ns.value.size(); ++j) {
    VMorphism m = untranspose_right(a, b, c, bc, ns.value[j]);
    if (!contains(ms.value, m))
      rep.law("right-untranspose-lands", {std::to_string(j)}, "member of V(A@B,C)", "missing");
    if (!same_vmorphism(transpose_right(a, b, c, bc, m), ns.value[j]))
      rep.law("right-round-trip-back", {std::to_string(j)}, "identity", "differs");
  }
  for (size_t j = 0; j < ps.value.size(); ++j) {
    VMorphism m = untranspose_left(a, b, c, ac, ps.value[j]);
    if (!contains(ms.value, m))
      rep.law("left-untranspose-lands", {std::to_string(j)}, "member of V(A@B,C)", "missing");
    if (!same_vmorphism(transpose_left(a, b, c, ac, m), ps.value[j]))
      rep.law("left-round-trip-back", {std::to_string(j)}, "identity", "differs");
  }
  rep.sort_canonical();
  return rep;
}

inline SearchResult<DualityPair> certify_dual(const VObj& a, const Budget& budget = {}) {
  // deterministic candidate duals
  std::vector<VObj> candidates{unit_vobj(), twisted_unit(kMinus), a,
                               VObj{a.minus, a.plus},
                               VObj{op_category(a.minus), op_category(a.plus)},
                               VObj{op_category(a.plus), op_category(a.minus)}};
  BudgetGauge gauge{budget.functor_candidates};
  long long tried = 0;
  for (const auto& d : candidates) {
    VObj ad = tensor(a, d);
    VObj da = tensor(d, a);
    auto etas = enumerate_vmorphisms(unit_vobj(), ad, gauge);
    if (etas.budget_exceeded()) return SearchResult<DualityPair>::over(etas.reason);
    auto epss = enumerate_vmorphisms(da, unit_vobj(), gauge);
    if (epss.budget_exceeded()) return SearchResult<DualityPair>::over(epss.reason);
    for (const auto& eta : etas.value)
      for (const auto& eps : epss.value) {
        ++tried;
        if (!gauge.tick()) return SearchResult<DualityPair>::over("candidate budget exhausted");
        VMorphism t1 = zigzag_object(a, d, eta, eps);
        auto w1 = find_invertible_vnat_to_identity(t1);
        if (!w1) continue;
        VMorphism t2 = zigzag_dual(a, d, eta, eps);
        auto w2 = find_invertible_vnat_to_identity(t2);
        if (!w2) continue;
        return SearchResult<DualityPair>::hit({a, d, eta, eps, t1, t2, *w1, *w2});
      }
  }
  return SearchResult<DualityPair>::no(
      "no (eta, eps) pair satisfies both triangle identities; candidates tried: " +
      std::to_string(tried));
}

}  // namespace varcat

#endif
