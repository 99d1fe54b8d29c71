#include <catch2/catch_amalgamated.hpp>

#include "varcat/vmonoidal.hpp"

using namespace varcat;

namespace {

VObj vo(const FinCat& p, const FinCat& m) { return {p, m}; }

bool parts_isomorphic(const VObj& a, const VObj& b) {
  return check_isomorphism(a.plus, b.plus).found() &&
         check_isomorphism(a.minus, b.minus).found();
}

}  // namespace

TEST_CASE("units") {
  REQUIRE(unit_vobj().minus.objects.empty());
  REQUIRE(unit_vobj().plus.objects.size() == 1);
  REQUIRE(twisted_unit(kPlus) == unit_vobj());
  REQUIRE(twisted_unit(kMinus).plus.objects.empty());
  REQUIRE(twisted_unit(kMinus).minus.objects.size() == 1);
}

TEST_CASE("tensor with the unit is canonically isomorphic to the object") {
  VObj a = vo(chain_category(1), walking_iso());
  VMorphism lu = left_unitor(a);
  REQUIRE(validate_vmorphism(lu).ok());
  REQUIRE(validate_vmorphism(invert_vmorphism(lu)).ok());
  VMorphism ru = right_unitor(a);
  REQUIRE(validate_vmorphism(ru).ok());
  REQUIRE(validate_vmorphism(invert_vmorphism(ru)).ok());
}

TEST_CASE("dual unit squares to the unit") {
  VObj t = tensor(twisted_unit(kMinus), twisted_unit(kMinus));
  REQUIRE(t.plus.objects.size() == 1);
  REQUIRE(t.minus.objects.empty());
  VMorphism iso = twisted_unit_mult_iso(kMinus, kMinus);
  REQUIRE(validate_vmorphism(iso).ok());
  REQUIRE(validate_vmorphism(invert_vmorphism(iso)).ok());
}

TEST_CASE("twisted unit multiplication isos for all pairs") {
  for (Variance g : all_variances())
    for (Variance h : all_variances()) {
      VMorphism iso = twisted_unit_mult_iso(g, h);
      INFO(to_string(g) << to_string(h));
      REQUIRE(validate_vmorphism(iso).ok());
      REQUIRE(validate_vmorphism(invert_vmorphism(iso)).ok());
    }
}

TEST_CASE("tensoring with the dual unit swaps and ops the parts") {
  VObj a = vo(chain_category(1), discrete_category(2));
  VObj t = tensor(twisted_unit(kMinus), a);
  REQUIRE(parts_isomorphic(t, vo(op_category(a.minus), op_category(a.plus))));
}

TEST_CASE("tensor parts are built from products, coproducts, and op") {
  VObj a = vo(chain_category(1), chain_category(1));
  VObj b = vo(chain_category(1), chain_category(1));
  VObj t = tensor(a, b);
  REQUIRE(validate_vobj(t).ok());
  // (2x2) + (2x2): 4+4 objects, 9+9 morphisms per part
  REQUIRE(t.plus.objects.size() == 8);
  REQUIRE(t.plus.morphisms.size() == 18);
  REQUIRE(t.minus.objects.size() == 8);
}

TEST_CASE("right hom out of the unit is the object") {
  VObj c = vo(chain_category(1), discrete_category(2));
  HomResult h = right_hom(unit_vobj(), c);
  REQUIRE(parts_isomorphic(h.vobj, c));
  REQUIRE(h.expansion.size() == 2);
}

TEST_CASE("right hom out of the dual unit swaps the parts") {
  VObj c = vo(chain_category(1), discrete_category(2));
  HomResult h = right_hom(twisted_unit(kMinus), c);
  REQUIRE(parts_isomorphic(h.vobj, vo(c.minus, c.plus)));
}

TEST_CASE("right hom out of a twisted unit evaluates to the gh component") {
  VObj a = vo(chain_category(1), discrete_category(2));
  for (Variance h : all_variances()) {
    HomResult r = right_hom(twisted_unit(h), a);
    for (Variance g : all_variances()) {
      INFO("g=" << to_string(g) << " h=" << to_string(h));
      REQUIRE(check_isomorphism(r.vobj.part(g), a.part(g * h)).found());
    }
  }
}

TEST_CASE("left hom out of the unit is the object") {
  VObj c = vo(chain_category(1), discrete_category(2));
  HomResult h = left_hom(unit_vobj(), c);
  REQUIRE(parts_isomorphic(h.vobj, c));
}

TEST_CASE("left and right hom differ on an asymmetric example") {
  VObj c = vo(chain_category(1), chain_category(1));
  HomResult r = right_hom(twisted_unit(kMinus), c);
  HomResult l = left_hom(twisted_unit(kMinus), c);
  // right gives (C-, C+); left gives (op C-, op C+)
  REQUIRE(parts_isomorphic(r.vobj, vo(c.minus, c.plus)));
  REQUIRE(parts_isomorphic(l.vobj, vo(op_category(c.minus), op_category(c.plus))));
}

TEST_CASE("adjunction bijections hold on small triples, both directions") {
  VObj u = unit_vobj();
  VObj du = twisted_unit(kMinus);
  VObj a = vo(chain_category(1), empty_category());
  VObj b = vo(terminal_category(), terminal_category());
  VObj c = vo(chain_category(1), chain_category(1));

  struct T {
    VObj a, b, c;
  } triples[] = {{u, u, u},  {du, du, u}, {du, u, c},  {u, du, c}, {a, b, c},
                 {b, a, c},  {du, b, c},  {a, du, c},  {b, b, b},  {a, a, c}};
  for (const auto& t : triples) {
    ValidationReport rep = verify_adjunctions(t.a, t.b, t.c);
    INFO(rep.render());
    REQUIRE(rep.ok());
    REQUIRE(rep.budget_notes.empty());
  }
}

TEST_CASE("associator components are bijective and satisfy the pentagon") {
  VObj du = twisted_unit(kMinus);
  VObj a = vo(chain_category(1), terminal_category());

  VMorphism assoc = associator(a, du, a);
  REQUIRE(validate_vmorphism(assoc).ok());
  REQUIRE(validate_vmorphism(invert_vmorphism(assoc)).ok());

  // pentagon: evaluate both pasting composites
  auto pentagon = [](const VObj& w, const VObj& x, const VObj& y, const VObj& z) {
    VMorphism top1 = associator(tensor(w, x), y, z);
    VMorphism top2 = associator(w, x, tensor(y, z));
    VMorphism left1 = tensor_mor(associator(w, x, y), identity_vmorphism(z));
    VMorphism left2 = associator(w, tensor(x, y), z);
    VMorphism left3 = tensor_mor(identity_vmorphism(w), associator(x, y, z));
    VMorphism lhs = compose_vmorphisms(top2, top1);
    VMorphism rhs = compose_vmorphisms(left3, compose_vmorphisms(left2, left1));
    return same_vmorphism(lhs, rhs);
  };
  REQUIRE(pentagon(du, du, du, du));
  REQUIRE(pentagon(a, du, a, du));

  // triangle for (A, 1, B)
  VObj b = vo(discrete_category(2), empty_category());
  VMorphism tri_lhs = compose_vmorphisms(tensor_mor(identity_vmorphism(a), left_unitor(b)),
                                         associator(a, unit_vobj(), b));
  VMorphism tri_rhs = tensor_mor(right_unitor(a), identity_vmorphism(b));
  REQUIRE(same_vmorphism(tri_lhs, tri_rhs));
}

TEST_CASE("certify_dual: units are self-dual on the nose") {
  auto r1 = certify_dual(unit_vobj());
  REQUIRE(r1.found());
  REQUIRE(r1.value.dual == unit_vobj());

  auto r2 = certify_dual(twisted_unit(kMinus));
  REQUIRE(r2.found());
  REQUIRE(r2.value.dual == twisted_unit(kMinus));
  for (const auto& [x, c] : r2.value.triangle_object_wit.plus.components)
    REQUIRE(r2.value.triangle_object.source.plus.is_identity(c));
}

TEST_CASE("certify_dual: (2,0) has no dual in the search space") {
  auto r = certify_dual(vo(chain_category(1), empty_category()));
  REQUIRE(r.negative());
  REQUIRE(r.reason.find("triangle") != std::string::npos);
}

TEST_CASE("hom expansion is reported") {
  HomResult h = right_hom(twisted_unit(kMinus), vo(chain_category(1), chain_category(1)));
  REQUIRE(h.expansion.size() == 2);
  REQUIRE(h.expansion[0].find("Fun(") != std::string::npos);
}
