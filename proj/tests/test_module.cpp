#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "induction.hpp"
#include "qh.hpp"

using namespace qhlab;

namespace {

std::vector<int> layer_sizes(const std::vector<std::vector<int>>& layers) {
    std::vector<int> out;
    for (const auto& l : layers) {
        int s = 0;
        for (int c : l) s += c;
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST_CASE("regular module and simple modules") {
    auto a = corpus::cyc2().algebra;
    Module reg = regular_module(a);
    CHECK(reg.dim == 5);
    CHECK(simple_module(a, 0).dim == 1);
    CHECK(simple_module(a, 1).dim == 1);
}

TEST_CASE("hom spaces: simples, projectives, the regular module") {
    auto a = corpus::cyc2().algebra;
    Module l1 = simple_module(a, 0), l2 = simple_module(a, 1);
    CHECK(hom_dim(l1, l2) == 0);
    CHECK(hom_dim(l1, l1) == 1);

    // dim Hom(A, M) = dim M
    Module reg = regular_module(a);
    Module p1 = projective_module(a, 0);
    CHECK(hom_dim(reg, p1) == p1.dim);
    CHECK(hom_dim(reg, l1) == 1);

    // projectivity pairing: dim Hom(P_i, M) = multiplicity of L_i in M
    for (int l = 0; l < 2; ++l) {
        Module p = projective_module(a, l);
        CHECK(hom_dim(p, reg) == composition_factors(reg)[l]);
        CHECK(hom_dim(p, p1) == composition_factors(p1)[l]);
    }
}

TEST_CASE("loewy layers of the base example projectives") {
    auto a = corpus::cyc2().algebra;
    Module p1 = projective_module(a, 0);
    auto layers = loewy_layers(p1);
    REQUIRE(layers.size() == 3);
    CHECK(layers[0] == std::vector<int>{1, 0});
    CHECK(layers[1] == std::vector<int>{0, 1});
    CHECK(layers[2] == std::vector<int>{1, 0});

    Module p2 = projective_module(a, 1);
    auto layers2 = loewy_layers(p2);
    REQUIRE(layers2.size() == 2);
    CHECK(layers2[0] == std::vector<int>{0, 1});
    CHECK(layers2[1] == std::vector<int>{1, 0});

    // semisimple module: single layer
    auto s = corpus::semisimple(2).algebra;
    CHECK(loewy_layers(regular_module(s)).size() == 1);
}

TEST_CASE("submodules: generated by a top vector vs a socle vector of P1") {
    auto a = corpus::cyc2().algebra;
    Module p1 = projective_module(a, 0);
    std::vector<Vec> all;
    for (int i = 0; i < p1.dim; ++i) all.push_back(vec_unit(p1.dim, i));
    CHECK(submodule_generated(p1, all).module.dim == p1.dim);

    Subspace rad = radical_subspace(p1);
    bool found = false;
    for (int i = 0; i < p1.dim && !found; ++i) {
        Vec cand = vec_unit(p1.dim, i);
        if (!rad.contains(cand)) {
            CHECK(submodule_generated(p1, {cand}).module.dim == p1.dim);
            found = true;
        }
    }
    CHECK(found);

    SubmoduleResult soc = socle(p1);
    CHECK(soc.module.dim == 1);
    Vec socv = soc.inclusion.col(0);
    CHECK(submodule_generated(p1, {socv}).module.dim == 1);
}

TEST_CASE("quotients: by zero, by everything, P1/rad^2") {
    auto a = corpus::cyc2().algebra;
    Module p1 = projective_module(a, 0);
    CHECK(quotient_module(p1, Subspace::zero(p1.dim)).module.dim == p1.dim);
    CHECK(quotient_module(p1, Subspace::full(p1.dim)).module.dim == 0);

    Subspace rad = radical_subspace(p1);
    SubmoduleResult rsub = submodule_from_subspace(p1, rad);
    Subspace rad2_in_rad = radical_subspace(rsub.module);
    std::vector<Vec> rad2;
    for (int i = 0; i < rad2_in_rad.basis.rows; ++i)
        rad2.push_back(rsub.inclusion.apply(rad2_in_rad.basis.row(i)));
    QuotientResult q = quotient_module(p1, Subspace::span(p1.dim, rad2));
    CHECK(q.module.dim == 2);

    // quotient by a non-submodule throws
    Vec outside;
    for (int i = 0; i < p1.dim; ++i) {
        Vec cand = vec_unit(p1.dim, i);
        if (!rad.contains(cand)) { outside = cand; break; }
    }
    REQUIRE(!outside.empty());
    CHECK_THROWS_AS(quotient_module(p1, Subspace::span(p1.dim, {outside})), Error);
}

TEST_CASE("top and socle") {
    auto a = corpus::cyc2().algebra;
    Module p1 = projective_module(a, 0), p2 = projective_module(a, 1);
    CHECK(top(p1).module.dim == 1);
    CHECK(semisimple_label_counts(top(p1).module) == std::vector<int>{1, 0});
    CHECK(semisimple_label_counts(top(p2).module) == std::vector<int>{0, 1});
    CHECK(socle(p1).module.dim == 1);
    CHECK(semisimple_label_counts(socle(p1).module) == std::vector<int>{1, 0});

    auto s = corpus::semisimple(3).algebra;
    Module reg = regular_module(s);
    CHECK(top(reg).module.dim == 3);
    CHECK(socle(reg).module.dim == 3);
}

TEST_CASE("is_isomorphic: identity, distinct projectives, shuffled basis") {
    auto a = corpus::cyc2().algebra;
    Module p1 = projective_module(a, 0), p2 = projective_module(a, 1);
    CHECK(is_isomorphic(p1, p1));
    CHECK(!is_isomorphic(p1, p2));

    Matrix perm = Matrix::zero(3, 3);
    perm.at(0, 2) = rat(1);
    perm.at(1, 0) = rat(1);
    perm.at(2, 1) = rat(1);
    auto pinv = inverse(perm);
    REQUIRE(pinv.has_value());
    std::vector<Matrix> action;
    for (const auto& m : p1.action) action.push_back(perm.mul(m).mul(*pinv));
    Module shuffled = make_module(a, std::move(action), "P1.shuffled");
    CHECK(is_isomorphic(p1, shuffled));
}

TEST_CASE("dual: simples stay simple, double dual, layer reversal") {
    auto a = corpus::cyc2().algebra;
    AlgebraPtr op = opposite_cached(a);
    Module p1 = projective_module(a, 0);
    Module d = dual_module(p1, op);
    CHECK(d.dim == p1.dim);
    Module dd = dual_module(d, a);
    CHECK(is_isomorphic(p1, dd));

    Module l1 = simple_module(a, 0);
    Module dl = dual_module(l1, op);
    CHECK(total_length(dl) == 1);

    auto layers = layer_sizes(loewy_layers(d));
    CHECK(layers == std::vector<int>{1, 1, 1});
}

TEST_CASE("induce along the identity embedding is the identity") {
    auto a = corpus::cyc2().algebra;
    Embedding id = identity_embedding(a);
    Module p1 = projective_module(a, 0);
    InduceResult r = induce(id, p1);
    CHECK(r.module.dim == p1.dim);
    CHECK(is_isomorphic(r.module, p1));
    CHECK(r.f_injective);
}

TEST_CASE("induce over the base-example Borel gives standard modules") {
    auto bqa = corpus::cyc2();
    auto a = bqa.algebra;
    Embedding emb = corpus::cyc2_borel(bqa);
    verify_embedding(emb);
    SimpleOrder order = SimpleOrder::chain(2);

    Module l1 = simple_module(emb.sub, 0);
    InduceResult r1 = induce(emb, l1);
    CHECK(r1.module.dim == 1);  // Delta_1 = L_1
    CHECK(r1.f_injective);
    CHECK(is_isomorphic(r1.module, standard_module(a, order, 0)));

    Module l2 = simple_module(emb.sub, 1);
    InduceResult r2 = induce(emb, l2);
    CHECK(r2.module.dim == 2);  // Delta_2 = P_2
    CHECK(r2.f_injective);
    CHECK(is_isomorphic(r2.module, standard_module(a, order, 1)));

    // f is injective for B itself (the inclusion B -> A)
    Module regb = regular_module(emb.sub);
    InduceResult rb = induce(emb, regb);
    CHECK(rb.f_injective);

    // exactness in dimensions over a short exact sequence of B-modules
    Module pb1 = projective_module(emb.sub, 0);
    InduceResult rp = induce(emb, pb1);
    Subspace rad = radical_subspace(pb1);
    Module radm = submodule_from_subspace(pb1, rad).module;
    Module topm = top(pb1).module;
    CHECK(rp.module.dim == induce(emb, radm).module.dim + induce(emb, topm).module.dim);
}

TEST_CASE("non-embedding rejected") {
    auto bqa = corpus::cyc2();
    auto a = bqa.algebra;
    // map sending the subalgebra unit elsewhere is not unital
    auto k2 = corpus::semisimple(2).algebra;
    Matrix bad = Matrix::zero(a->dim, 2);
    bad.at(0, 0) = rat(1);
    bad.at(0, 1) = rat(1);  // both idempotents onto e1: not injective either
    Embedding e{k2, a, bad};
    CHECK_THROWS_AS(verify_embedding(e), Error);
}

TEST_CASE("bimodules: regular, tensor over the algebra, simple pairs") {
    auto a2 = corpus::a2_path().algebra;  // k(1->2)
    Bimodule reg = regular_bimodule(a2);
    CHECK(reg.dim() == 3);

    // A (x)_A M = M
    BimoduleTensor t = tensor_over_algebra(reg, reg);
    CHECK(t.result.dim() == 3);
    CHECK(bimodules_isomorphic(t.result, reg));

    // M_beta = kQ' as bimodule, M_alpha = L1 (x) L1^op: the product block of
    // the A3 counterexample is one-dimensional
    Bimodule simple_pair = simple_pair_bimodule(a2, a2, 0, 0);
    CHECK(simple_pair.dim() == 1);
    BimoduleTensor t2 = tensor_over_algebra(reg, simple_pair);
    CHECK(t2.result.dim() == 1);

    // mismatched middle algebras rejected
    auto k = corpus::semisimple(1).algebra;
    Bimodule wrong = free_bimodule(k, a2, 1);  // middle would need to be k
    CHECK_THROWS_AS(tensor_over_algebra(reg, wrong), Error);
}

TEST_CASE("free bimodules restrict to regular modules") {
    auto a2 = corpus::a2_path().algebra;
    auto k = corpus::semisimple(1).algebra;
    Bimodule left_reg = free_bimodule(a2, k, 1);  // A as (A, k)-bimodule
    CHECK(left_reg.dim() == 3);
    Module lm = left_restrict(left_reg);
    CHECK(is_isomorphic(lm, regular_module(a2)));

    Bimodule right_reg = free_bimodule(k, a2, 1);
    CHECK(right_reg.dim() == 3);
    Module rm = right_restrict_op(right_reg);
    CHECK(is_isomorphic(rm, regular_module(opposite_cached(a2))));
}

TEST_CASE("projective cover and is_projective") {
    auto a = corpus::cyc2().algebra;
    Module p1 = projective_module(a, 0);
    CHECK(is_projective(p1));
    CoverResult c = projective_cover(p1);
    CHECK(c.cover.dim == p1.dim);

    Module l1 = simple_module(a, 0);
    CHECK(!is_projective(l1));
    CoverResult cl = projective_cover(l1);
    CHECK(cl.cover.dim == 3);
    CHECK(cl.top_counts == std::vector<int>{1, 0});

    Module reg = regular_module(a);
    CHECK(is_projective(reg));

    // cover kernel lies in the radical of the cover
    Subspace rad = radical_subspace(cl.cover);
    Matrix ker = kernel_basis(cl.surjection);
    for (int i = 0; i < ker.rows; ++i) CHECK(rad.contains(ker.row(i)));
}

TEST_CASE("tensor of modules over the tensor algebra") {
    auto a = corpus::cyc2().algebra;
    AlgebraPtr aa = tensor_algebras(a, a);
    Module p1 = projective_module(a, 0);
    Module t = tensor_modules(p1, p1, aa);
    CHECK(t.dim == 9);
    int l11 = aa->label_index("(1,1)");
    CHECK(is_isomorphic(t, projective_module(aa, l11)));
}

TEST_CASE("duality: loewy layers of the dual trace the socle series") {
    // top(D M) = D(soc M), so the radical series of the dual, read from the
    // top, is the socle series of the original read from the socle
    auto a = corpus::cyc2().algebra;
    AlgebraPtr op = opposite_cached(a);
    for (int l = 0; l < 2; ++l) {
        Module m = projective_module(a, l);
        std::vector<std::vector<int>> socle_series;  // socle first
        Module cur = m;
        while (cur.dim > 0) {
            SubmoduleResult soc = socle(cur);
            socle_series.push_back(semisimple_label_counts(soc.module));
            if (soc.module.dim == cur.dim) break;
            cur = quotient_module(cur, soc.space).module;
        }
        auto dual_layers = loewy_layers(dual_module(m, op));
        CHECK(dual_layers == socle_series);
    }
}

TEST_CASE("tensor_over_algebra is associative up to isomorphism") {
    auto a2 = corpus::a2_path().algebra;
    Bimodule reg = regular_bimodule(a2);
    Bimodule sp = simple_pair_bimodule(a2, a2, 0, 0);
    // (reg (x) reg) (x) sp vs reg (x) (reg (x) sp)
    Bimodule left = tensor_over_algebra(tensor_over_algebra(reg, reg).result, sp).result;
    Bimodule right = tensor_over_algebra(reg, tensor_over_algebra(reg, sp).result).result;
    CHECK(left.dim() == right.dim());
    CHECK(bimodules_isomorphic(left, right));
}
