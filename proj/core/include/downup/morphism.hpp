#pragma once

#include "downup/algebra.hpp"

#include <string>

namespace downup {

// An algebra map given by the images of the generators d and u.
struct GenImages {
    Element d_img;
    Element u_img;

    friend bool operator==(const GenImages&, const GenImages&) = default;
};

enum class EndoKind { straight, swap };

/*
  A classified endomorphism of A_S.

    straight: d -> gamma1 x^i y^j d,  u -> gamma2 x^k y^l u
    swap:     d -> gamma1 x^i y^j u,  u -> gamma2 x^k y^l d

  Case 1 requires i+k = j+l = 0 (straight) or -1 (swap); case 2 requires
  i+k = j+l, the common value being the z-twist.
*/
struct ClassifiedEndo {
    EndoKind kind = EndoKind::straight;
    Scalar gamma1{1};
    Scalar gamma2{1};
    int i = 0;
    int j = 0;
    int k = 0;
    int l = 0;

    static ClassifiedEndo identity() { return ClassifiedEndo{}; }

    int twist() const { return i + k; }

    friend bool operator==(const ClassifiedEndo&, const ClassifiedEndo&) = default;
};

// theta(x) = coef x^px y^py
struct LaurentMonomial {
    Scalar coef;
    int px = 0;
    int py = 0;

    friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;
};

struct LaurentImages {
    LaurentMonomial x;
    LaurentMonomial y;
};

// x -> d u - r u d, y -> d u - s u d
Element image_of_x(const Algebra& alg, const GenImages& g);
Element image_of_y(const Algebra& alg, const GenImages& g);

// Both defining relations hold for the images; when `localized`, the images
// of x and y are also invertible, otherwise both images must lie in the
// unlocalized algebra.
bool check_endo(const Algebra& alg, const GenImages& g, bool localized);

GenImages images(const ClassifiedEndo& m);

// Throws NotClassifiable unless the images are single monomial multiples of
// (d, u) or (u, d) obeying the exponent constraint of the active case.
ClassifiedEndo classify(const Algebra& alg, const GenImages& g);

// Ring-map extension over PBW words.
Element apply(const Algebra& alg, const GenImages& g, const Element& e);
Element apply(const Algebra& alg, const ClassifiedEndo& m, const Element& e);

// Images of x and y in closed form.
LaurentImages laurent_images(const Algebra& alg, const ClassifiedEndo& m);

// n with theta(z) = lambda z^n.
int center_exponent(const Algebra& alg, const ClassifiedEndo& m);

// f after g, from the closed-form parameter arithmetic.
ClassifiedEndo compose(const Algebra& alg, const ClassifiedEndo& f, const ClassifiedEndo& g);

// f after g, by applying f to the generator images of g and classifying.
ClassifiedEndo compose_on_generators(const Algebra& alg, const ClassifiedEndo& f,
                                     const ClassifiedEndo& g);

// Solves compose(m, phi) = identity inside the classified family. Throws
// NotAutomorphism when the induced map on Laurent exponents is not
// unimodular, which happens exactly when the center exponent is not +-1.
ClassifiedEndo invert(const Algebra& alg, const ClassifiedEndo& m);

// Closed-form inverses for the case 1 families. Used only to cross-check
// invert(); the swap formula does not agree with it in general.
ClassifiedEndo formula_inverse(const Algebra& alg, const ClassifiedEndo& m);

enum class SurjectivityVerdict { automorphism, not_surjective_at_bound, inconclusive };

// Semi-decision for endomorphisms of the unlocalized algebra: recognizes the
// automorphism forms d -> lambda d, u -> gamma u and d -> lambda u, u -> gamma d,
// otherwise looks for d and u in the span of products of at most
// `degree_bound` generator images. Throws NotAnEndomorphism when the images
// violate the defining relations of the unlocalized algebra.
SurjectivityVerdict check_surjective_unlocalized(const Algebra& alg, const GenImages& g,
                                                 int degree_bound);

std::string to_string(EndoKind kind);
std::string to_string(SurjectivityVerdict v);

} // namespace downup
