#include <catch2/catch_amalgamated.hpp>

#include "varcat/contra2cat.hpp"

using namespace varcat;

namespace {

ContraTwoCat two_op2() {
  return cat_sub({{"2", chain_category(1)}, {"op2", op_category(chain_category(1))}});
}

}  // namespace

TEST_CASE("cat_sub({1}) has terminal homs in both variances") {
  ContraTwoCat a = cat_sub({{"1", terminal_category()}});
  REQUIRE(a.hom_at("1", "1").plus.objects.size() == 1);
  REQUIRE(a.hom_at("1", "1").minus.objects.size() == 1);
  REQUIRE(validate_contra_2cat(a).ok());
}

TEST_CASE("cat_sub({2}) homs") {
  ContraTwoCat a = cat_sub({{"2", chain_category(1)}});
  REQUIRE(a.hom_at("2", "2").plus.objects.size() == 3);   // Fun(2,2)
  REQUIRE(a.hom_at("2", "2").minus.objects.size() == 3);  // Fun(op 2, 2)
  REQUIRE(validate_contra_2cat(a).ok());
}

TEST_CASE("cat_sub({2, op2}) passes all twelve axiom families") {
  ContraTwoCat a = two_op2();
  for (const auto& x : a.objects)
    for (const auto& y : a.objects) {
      REQUIRE(a.hom_at(x, y).plus.morphisms.size() <= 9);
      REQUIRE(a.hom_at(x, y).minus.morphisms.size() <= 9);
    }
  ValidationReport rep = validate_contra_2cat(a);
  INFO(rep.render());
  REQUIRE(rep.ok());
}

TEST_CASE("contravariant iso pairs exist where op-partners sit inside") {
  ContraTwoCat a = two_op2();
  const FinCat& h = a.hom_at("2", "op2").minus;
  REQUIRE(h.objects.size() == 3);
  const FinCat& h2 = a.hom_at("op2", "2").minus;
  bool has_pair = false;
  for (const auto& chi : h.objects)
    for (const auto& xi : h2.objects) {
      if (a.comp1("2", "op2", "2", kMinus, xi, kMinus, chi) == a.unit_of("2") &&
          a.comp1("op2", "2", "op2", kMinus, chi, kMinus, xi) == a.unit_of("op2"))
        has_pair = true;
    }
  REQUIRE(has_pair);
}

TEST_CASE("whether 2 is self-opposite inside cat_sub({2})") {
  // The walking arrow is isomorphic to its own opposite via the swap, so a
  // contravariant iso pair exists even without op(2) present.
  ContraTwoCat a = cat_sub({{"2", chain_category(1)}});
  const FinCat& h = a.hom_at("2", "2").minus;  // Fun(op 2, 2)
  bool has_pair = false;
  std::string chi_found, xi_found;
  for (const auto& chi : h.objects)
    for (const auto& xi : h.objects) {
      if (a.comp1("2", "2", "2", kMinus, xi, kMinus, chi) == a.unit_of("2") &&
          a.comp1("2", "2", "2", kMinus, chi, kMinus, xi) == a.unit_of("2")) {
        has_pair = true;
        chi_found = chi;
        xi_found = xi;
      }
    }
  INFO("chi=" << chi_found << " xi=" << xi_found);
  CHECK(has_pair);
}

TEST_CASE("single-entry mutation is caught with the right family address") {
  ContraTwoCat a = two_op2();
  auto& fam = a.comp[key3("2", "2", "2")];
  FunctorData& f = fam[comp_index(kPlus, kPlus)];
  bool mutated = false;
  for (auto& [k, v] : f.obj_map) {
    if (k.find(a.unit_of("2")) != std::string::npos) continue;
    for (const auto& alt : a.hom_at("2", "2").plus.objects)
      if (alt != v) {
        v = alt;
        mutated = true;
        break;
      }
    if (mutated) break;
  }
  REQUIRE(mutated);
  ValidationReport rep = validate_contra_2cat(a);
  REQUIRE_FALSE(rep.ok());
  bool addressed = false;
  for (const auto& fd : rep.findings)
    if (fd.family.rfind("assoc(", 0) == 0 || fd.family.rfind("unit-", 0) == 0 ||
        fd.family == "comp")
      addressed = true;
  REQUIRE(addressed);
}

TEST_CASE("one object with trivial contravariant part is valid") {
  ContraTwoCat a;
  a.name = "pt";
  a.objects = {"x"};
  FunctorCategory fc = functor_category(terminal_category(), terminal_category());
  a.hom[{"x", "x"}] = VObj{fc.cat, empty_category()};
  a.unit["x"] = fc.cat.objects[0];
  std::array<FunctorData, 4> fam;
  for (Variance h : all_variances())
    for (Variance g : all_variances()) {
      FunctorData f{a.comp_domain("x", "x", "x", h, g), a.hom_at("x", "x").part(g * h), {}, {}};
      if (h == kPlus && g == kPlus) {
        for (const auto& o : f.source.objects) f.obj_map[o] = fc.cat.objects[0];
        for (const auto& m : f.source.morphisms)
          f.mor_map[m.id] = fc.cat.identity.begin()->second;
      }
      fam[comp_index(h, g)] = f;
    }
  a.comp[key3("x", "x", "x")] = fam;
  ValidationReport rep = validate_contra_2cat(a);
  INFO(rep.render());
  REQUIRE(rep.ok());
}

TEST_CASE("underlying_2cat forgets contravariant data and is idempotent") {
  ContraTwoCat a = cat_sub({{"2", chain_category(1)}});
  ContraTwoCat u = underlying_2cat(a);
  REQUIRE(validate_contra_2cat(u).ok());
  REQUIRE(u.hom_at("2", "2").minus.objects.empty());
  REQUIRE(u.hom_at("2", "2").plus == a.hom_at("2", "2").plus);
  REQUIRE(contra_equal(underlying_2cat(u), u));
}

TEST_CASE("identity variance functor validates; inclusion validates") {
  ContraTwoCat a = cat_sub({{"2", chain_category(1)}});
  ContraTwoCat b = two_op2();
  REQUIRE(validate_variance_functor(identity_variance_functor(b)).ok());

  VarianceFunctor inc{a, b, {}, {}};
  inc.obj_map["2"] = "2";
  inc.hom_maps[{"2", "2"}] = identity_vmorphism(a.hom_at("2", "2"));
  ValidationReport rep = validate_variance_functor(inc);
  INFO(rep.render());
  REQUIRE(rep.ok());
}

TEST_CASE("a functor with one mis-mapped 2-cell fails preservation") {
  ContraTwoCat b = two_op2();
  VarianceFunctor f = identity_variance_functor(b);
  FunctorData& part = f.hom_maps[{"2", "2"}].plus_part;
  for (auto& [k, v] : part.mor_map) {
    const Mor& m = b.hom_at("2", "2").plus.mor(k);
    if (m.src != m.tgt) {
      v = b.hom_at("2", "2").plus.identity_of(m.src);  // endpoint-breaking rebind
      break;
    }
  }
  ValidationReport rep = validate_variance_functor(f);
  REQUIRE_FALSE(rep.ok());
}

TEST_CASE("composite of valid variance functors is valid") {
  ContraTwoCat b = two_op2();
  VarianceFunctor id = identity_variance_functor(b);
  VarianceFunctor comp = compose_variance_functors(id, id);
  REQUIRE(validate_variance_functor(comp).ok());
}

TEST_CASE("identity variance transformation validates") {
  ContraTwoCat b = cat_sub({{"2", chain_category(1)}});
  VarianceFunctor id = identity_variance_functor(b);
  VarianceTransformation tr{id, id, {}};
  for (const auto& x : b.objects) tr.components[x] = b.unit_of(x);
  ValidationReport rep = validate_variance_transformation(tr);
  INFO(rep.render());
  REQUIRE(rep.ok());
}

TEST_CASE("cell calculus on the covariant fragment") {
  ContraTwoCat b = two_op2();
  CellCalc cc{b};
  Cell1 u = cc.id1("2");
  REQUIRE(cc.comp1(u, u) == u);
  Cell2 iu = cc.id2(u);
  REQUIRE(cc.vcomp(iu, iu) == iu);
  for (const auto& m : b.hom_at("2", "2").plus.morphisms) {
    Cell2 c = cc.cell2("2", "2", m.id);
    Cell2 w = cc.whisk_post(cc.id1("2"), c);
    REQUIRE(w.id == c.id);
    Cell2 w2 = cc.whisk_pre(c, cc.id1("2"));
    REQUIRE(w2.id == c.id);
  }
}
