#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wtop/ext_weight.hpp"

namespace wtop {

/// A finite category with an additive weight per morphism: w(id) = 0 and
/// w(a then b) <= w(a) + w(b). Given by a total composition table.
struct FiniteWeightedCategory {
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    struct Morphism {
        std::string name;
        std::size_t src = 0, dst = 0;
        ExtWeight w;
    };

    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::vector<std::size_t> identity;                 // object index -> morphism index
    std::vector<std::vector<std::size_t>> then_table;  // [f][g] = "f then g", npos off-domain

    std::size_t object_index(const std::string& name) const;    // throws UnknownObject
    std::size_t morphism_index(const std::string& name) const;  // throws ValidationError
    bool composable(std::size_t f, std::size_t g) const {
        return morphisms[f].dst == morphisms[g].src;
    }
    std::size_t then(std::size_t f, std::size_t g) const { return then_table[f][g]; }
    bool is_identity(std::size_t f) const { return identity[morphisms[f].src] == f; }
    std::vector<std::size_t> hom(std::size_t x, std::size_t y) const;
};

/// Category and weight axioms; throws NotACategory or WeightAxiomViolation
/// naming the violating pair.
FiniteWeightedCategory validate_wcat(FiniteWeightedCategory cat);
bool is_valid_wcat(const FiniteWeightedCategory& cat);

FiniteWeightedCategory terminal_category();
/// The directed interval: objects {0,1} and one arrow 0 -> 1 of weight 1.
FiniteWeightedCategory directed_interval();
FiniteWeightedCategory opposite_wcat(const FiniteWeightedCategory& cat);
FiniteWeightedCategory scale_wcat(const FiniteWeightedCategory& cat, const Rational& lambda);

struct SubcategoryResult {
    FiniteWeightedCategory category;
    std::vector<std::size_t> object_map;    // sub object -> original object
    std::vector<std::size_t> morphism_map;  // sub morphism -> original morphism
};

/// The full weighted subcategory on the given object indices, with the
/// restricted weight.
SubcategoryResult full_subcategory(const FiniteWeightedCategory& cat,
                                   const std::vector<std::size_t>& objects);

/// A functor between finite weighted categories, by index tables.
struct WFunctor {
    std::vector<std::size_t> obj;
    std::vector<std::size_t> mor;
};

WFunctor identity_functor(const FiniteWeightedCategory& cat);
/// Functoriality; throws NotACategory with the violating datum.
void check_functor(const FiniteWeightedCategory& C, const FiniteWeightedCategory& D,
                   const WFunctor& F);

/// Least lambda with w(F(a)) <= lambda * w(a) over all morphisms.
ExtWeight functor_lipschitz_weight(const FiniteWeightedCategory& C,
                                   const FiniteWeightedCategory& D, const WFunctor& F);

/// Product category with the l1 weight w(a,b) = w(a) + w(b).
FiniteWeightedCategory tensor_wcat(const FiniteWeightedCategory& X,
                                   const FiniteWeightedCategory& Y);

/// All functors C -> D, optionally only the 1-Lipschitz ones.
std::vector<WFunctor> enumerate_functors(const FiniteWeightedCategory& C,
                                         const FiniteWeightedCategory& D, bool one_lipschitz,
                                         std::size_t cap = 1000000);

struct HomWcatResult {
    FiniteWeightedCategory category;
    std::vector<WFunctor> functors;  // object index -> the functor Y -> Z it names
};

/// The internal hom Z^Y: objects are the 1-Lipschitz functors Y -> Z,
/// morphisms all natural transformations, weighted by the sup of the
/// component weights.
HomWcatResult hom_wcat(const FiniteWeightedCategory& Y, const FiniteWeightedCategory& Z,
                       std::size_t cap = 1000000);

/// A natural transformation between two parallel functors, one component
/// morphism of the target per source object.
struct WNatTrans {
    std::vector<std::size_t> component;
};

/// Naturality of phi : F -> G; throws NotACategory with a witness square.
void check_natural(const FiniteWeightedCategory& C, const FiniteWeightedCategory& D,
                   const WFunctor& F, const WFunctor& G, const WNatTrans& phi);

struct NatTransWeights {
    ExtWeight reduced;  // sup over objects of the component weight
    ExtWeight global;   // ||F|| v ||G|| v reduced
};

NatTransWeights nat_trans_weights(const FiniteWeightedCategory& C,
                                  const FiniteWeightedCategory& D, const WFunctor& F,
                                  const WFunctor& G, const WNatTrans& phi);

/// Report for a future-equivalence candidate (f, g; phi, psi) between C and
/// D: f : C <-> D : g with units phi : 1_C -> gf, psi : 1_D -> fg and the
/// coherence equations f phi = psi f, phi g = g psi.
struct FutureEquivalenceReport {
    bool valid = false;  // functoriality + naturality + coherence
    bool weights_finite = false;
    bool units_elementary = false;      // |phi| <= 1 and |psi| <= 1
    bool functors_one_lipschitz = false;
    ExtWeight f_weight, g_weight, phi_reduced, psi_reduced;
    std::vector<std::string> violations;
    bool elementary() const { return valid && weights_finite && units_elementary; }
};

FutureEquivalenceReport check_future_equivalence(const FiniteWeightedCategory& C,
                                                 const FiniteWeightedCategory& D,
                                                 const WFunctor& f, const WFunctor& g,
                                                 const WNatTrans& phi, const WNatTrans& psi);

/// A full reflective weighted subcategory witnessing a future retract:
/// reflector p with p i = 1, unit eta : 1 -> i p with p eta = 1, eta i = 1,
/// every unit component of weight <= 1, and ||p|| finite.
struct SpectrumResult {
    std::vector<std::size_t> objects;  // sorted object indices of the spectrum
    bool multiple_minima = false;
    WFunctor reflector;          // C -> C, landing in the subcategory
    WNatTrans unit;              // 1 -> reflector
    ExtWeight reflector_weight;  // Lipschitz weight of the reflector
    bool reflector_elementary = false;
};

/// Minimum-cardinality such subcategory, by exhaustive search over object
/// subsets in increasing size; ties broken lexicographically.
SpectrumResult future_spectrum(const FiniteWeightedCategory& C);
SpectrumResult past_spectrum(const FiniteWeightedCategory& C);

/// Whether the given object subset carries a future retract as above.
bool admits_future_retract(const FiniteWeightedCategory& C,
                           const std::vector<std::size_t>& subset);

struct PushoutResult {
    FiniteWeightedCategory category;
    WFunctor inj1, inj2;
};

/// Pushout of C1 <- C0 -> C2 in the van Kampen shape: u1, u2 are full
/// embeddings. Morphisms are congruence classes of composable words of
/// C1/C2 morphisms; the weight of a class is the least total weight of a
/// representing word. Saturation is capped.
PushoutResult pushout_wcat(const FiniteWeightedCategory& C0, const FiniteWeightedCategory& C1,
                           const FiniteWeightedCategory& C2, const WFunctor& u1,
                           const WFunctor& u2, std::size_t word_cap = 200000);

/// The weighted monoid of endoarrows at an object.
struct WeightedMonoid {
    std::vector<std::string> elements;
    std::vector<ExtWeight> weights;
    std::size_t unit = 0;
    std::vector<std::vector<std::size_t>> op;  // op[a][b] = "a then b"
};

WeightedMonoid homotopy_monoid(const FiniteWeightedCategory& C, const std::string& object);

}  // namespace wtop
