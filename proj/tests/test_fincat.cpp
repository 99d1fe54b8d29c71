#include <catch2/catch_amalgamated.hpp>

#include "varcat/fincat.hpp"

using namespace varcat;

namespace {

// Independent oracle: count structure-preserving maps A -> B by brute force,
// without going through for_each_functor's pruning order.
long brute_force_functor_count(const FinCat& a, const FinCat& b) {
  if (a.objects.empty()) return 1;
  if (b.objects.empty()) return 0;
  long count = 0;
  size_t no = a.objects.size(), nm = a.morphisms.size();
  std::vector<size_t> oc(no, 0), mc(nm, 0);
  while (true) {
    // candidate assignment
    FunctorData f{a, b, {}, {}};
    for (size_t i = 0; i < no; ++i) f.obj_map[a.objects[i]] = b.objects[oc[i]];
    bool ok = true;
    for (size_t i = 0; i < nm && ok; ++i) {
      if (mc[i] >= b.morphisms.size()) ok = false;
      else f.mor_map[a.morphisms[i].id] = b.morphisms[mc[i]].id;
    }
    if (ok && validate_functor(f).ok()) ++count;
    // odometer over all (object, morphism) assignments
    size_t k = 0;
    bool done = false;
    while (true) {
      if (k < nm) {
        if (++mc[k] < b.morphisms.size()) break;
        mc[k++] = 0;
      } else if (k - nm < no) {
        if (++oc[k - nm] < b.objects.size()) break;
        oc[k++ - nm] = 0;
      } else {
        done = true;
        break;
      }
    }
    if (done) break;
  }
  return count;
}

FinCat cyclic_monoid5() {
  // Z/5 as a one-object category; associativity holds by modular arithmetic.
  FinCat c;
  c.name = "Z5";
  c.objects = {"*"};
  for (int i = 0; i < 5; ++i) c.morphisms.push_back({"g" + std::to_string(i), "*", "*"});
  c.identity["*"] = "g0";
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      c.table[{"g" + std::to_string(i), "g" + std::to_string(j)}] =
          "g" + std::to_string((i + j) % 5);
  return c;
}

}  // namespace

TEST_CASE("validate_category accepts the walking arrow") {
  FinCat two = chain_category(1);
  REQUIRE(validate_category(two).ok());
  REQUIRE(two.objects.size() == 2);
  REQUIRE(two.morphisms.size() == 3);
}

TEST_CASE("validate_category reports a unit-law violation with its address") {
  FinCat two = chain_category(1);
  two.table[{"a_0_1", "id0"}] = "id0";  // rebind a.1_0 away from a
  ValidationReport rep = validate_category(two);
  REQUIRE_FALSE(rep.ok());
  bool hit = false;
  for (const auto& f : rep.findings)
    if (f.family == "unit-law" && f.address == std::vector<std::string>{"a_0_1", "id0"}) hit = true;
  REQUIRE(hit);
}

TEST_CASE("validate_category flags structural errors distinctly") {
  FinCat two = chain_category(1);
  two.table[{"id0", "a_0_1"}] = "a_0_1";  // entry on a non-composable pair
  ValidationReport rep = validate_category(two);
  REQUIRE_FALSE(rep.ok());
  REQUIRE(rep.has_structural());
}

TEST_CASE("a 5-element monoid with an associative table is valid") {
  REQUIRE(validate_category(cyclic_monoid5()).ok());
}

TEST_CASE("op reverses arrows, keeps ids, and is an involution on the nose") {
  FinCat two = chain_category(1);
  FinCat op = op_category(two);
  REQUIRE(validate_category(op).ok());
  REQUIRE(op.mor("a_0_1").src == "1");
  REQUIRE(op.mor("a_0_1").tgt == "0");
  REQUIRE(op_category(op) == two);
}

TEST_CASE("op of a chain is isomorphic to the chain via the order-reversing map") {
  FinCat three = chain_category(2);
  auto r = check_isomorphism(three, op_category(three));
  REQUIRE(r.found());
  REQUIRE(r.value.on_obj("0") == "2");
  REQUIRE(r.value.on_obj("2") == "0");
  // and the witness has a strict inverse
  FunctorData inv = strict_inverse(r.value);
  REQUIRE(validate_functor(inv).ok());
  REQUIRE(same_mapping(compose_functors(inv, r.value), identity_functor(three)));
}

TEST_CASE("product and coproduct carry canonical tags and projections") {
  FinCat two = chain_category(1);
  FinCat p = product_category(two, two);
  REQUIRE(validate_category(p).ok());
  REQUIRE(p.morphisms.size() == 9);  // 3 x 3
  REQUIRE(p.objects.size() == 4);

  FinCat c = coproduct_category(empty_category(), two);
  REQUIRE(validate_category(c).ok());
  REQUIRE(c.objects == std::vector<std::string>{"inr:0", "inr:1"});

  FinCat one = terminal_category();
  FinCat p1 = product_category(one, two);
  auto iso = check_isomorphism(p1, two);
  REQUIRE(iso.found());
}

TEST_CASE("functor enumeration matches the brute-force oracle") {
  FinCat two = chain_category(1);
  FinCat one = terminal_category();
  FinCat iso = walking_iso();

  struct Case {
    FinCat a, b;
  } cases[] = {{two, two}, {one, two}, {two, one}, {iso, two}, {two, iso}, {iso, iso}};
  for (const auto& [a, b] : cases) {
    long oracle = brute_force_functor_count(a, b);
    FunctorCategory fc = functor_category(a, b);
    INFO(a.name << " -> " << b.name);
    REQUIRE(static_cast<long>(fc.functors.size()) == oracle);
    REQUIRE(validate_category(fc.cat).ok());
  }
}

TEST_CASE("Fun(2,2) is the 3-chain") {
  FinCat two = chain_category(1);
  FunctorCategory fc = functor_category(two, two);
  REQUIRE(fc.functors.size() == 3);
  REQUIRE(fc.cat.morphisms.size() == 6);
  auto r = check_isomorphism(fc.cat, chain_category(2));
  REQUIRE(r.found());
}

TEST_CASE("Fun(0,C) is terminal and Fun(1,C) is C") {
  FinCat two = chain_category(1);
  FunctorCategory empty_src = functor_category(empty_category(), two);
  REQUIRE(check_isomorphism(empty_src.cat, terminal_category()).found());
  FunctorCategory point_src = functor_category(terminal_category(), two);
  REQUIRE(check_isomorphism(point_src.cat, two).found());
}

TEST_CASE("check_isomorphism basics") {
  FinCat two = chain_category(1);
  auto self = check_isomorphism(two, two);
  REQUIRE(self.found());
  REQUIRE(same_mapping(self.value, identity_functor(two)));

  auto swap = check_isomorphism(two, op_category(two));
  REQUIRE(swap.found());

  auto no = check_isomorphism(two, terminal_category());
  REQUIRE(no.negative());
  REQUIRE(no.reason.find("object counts differ") != std::string::npos);

  REQUIRE(check_isomorphism(two, op_category(two)).found() ==
          check_isomorphism(op_category(two), two).found());
}

TEST_CASE("check_isomorphism reports budget exhaustion distinctly") {
  Budget tiny;
  tiny.functor_candidates = 1;
  auto r = check_isomorphism(walking_iso(), walking_iso(), tiny);
  REQUIRE(r.budget_exceeded());
}

TEST_CASE("check_equivalence finds I ~ 1 and refuses 2 ~ 1 with a reason") {
  auto found = check_equivalence(walking_iso(), terminal_category());
  REQUIRE(found.found());
  REQUIRE(validate_equivalence_witness(found.value).ok());

  auto no = check_equivalence(chain_category(1), terminal_category());
  REQUIRE(no.negative());
  REQUIRE(no.reason.find("fullness fails at hom(1,0)") != std::string::npos);

  auto self = check_equivalence(chain_category(1), chain_category(1));
  REQUIRE(self.found());
}

TEST_CASE("equivalence witnesses re-verify independently") {
  auto r = check_equivalence(walking_iso(), walking_iso());
  REQUIRE(r.found());
  ValidationReport rep = validate_equivalence_witness(r.value);
  REQUIRE(rep.ok());
}

TEST_CASE("functor algebra: units, whiskers, interchange") {
  FinCat two = chain_category(1);
  FunctorCategory fc = functor_category(two, two);
  const FunctorData& f = fc.functors[1];
  REQUIRE(same_mapping(compose_functors(f, identity_functor(two)), f));
  REQUIRE(same_mapping(compose_functors(identity_functor(two), f), f));

  // whisker of an identity transformation is an identity transformation
  NatTransfData idt = identity_transf(f);
  NatTransfData w = whisker_post(identity_functor(two), idt);
  REQUIRE(w.components == idt.components);

  // interchange on a 2x2 grid inside Fun(I, I)
  FinCat isoc = walking_iso();
  FunctorCategory fi = functor_category(isoc, isoc);
  REQUIRE(fi.functors.size() == 4);
  // pick two composable vertical pairs and check interchange
  const FinCat& c = fi.cat;
  for (const auto& b1 : c.morphisms)
    for (const auto& a1 : c.morphisms) {
      if (a1.tgt != b1.src) continue;
      for (const auto& b2 : c.morphisms)
        for (const auto& a2 : c.morphisms) {
          if (a2.tgt != b2.src) continue;
          const NatTransfData& A1 = fi.transf_of(a1.id);
          const NatTransfData& B1 = fi.transf_of(b1.id);
          const NatTransfData& A2 = fi.transf_of(a2.id);
          const NatTransfData& B2 = fi.transf_of(b2.id);
          NatTransfData left =
              horizontal_compose(vertical_compose(B2, A2), vertical_compose(B1, A1));
          NatTransfData right =
              vertical_compose(horizontal_compose(B2, B1), horizontal_compose(A2, A1));
          REQUIRE(left.components == right.components);
        }
    }
}

TEST_CASE("every constructed category validates") {
  for (const FinCat& c : {empty_category(), terminal_category(), chain_category(1),
                          chain_category(2), walking_iso(), discrete_category(2), wedge_category(),
                          cyclic_monoid5()})
    REQUIRE(validate_category(c).ok());
}

TEST_CASE("wedge is not isomorphic to its opposite") {
  auto r = check_isomorphism(wedge_category(), op_category(wedge_category()));
  REQUIRE(r.negative());
}
