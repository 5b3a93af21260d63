#include "constructions.hpp"

#include "presentation.hpp"

#include <algorithm>
#include <sstream>

namespace qhlab {

TensorQhResult tensor_qh(const AlgebraPtr& a, const SimpleOrder& oa, const AlgebraPtr& a2,
                         const SimpleOrder& o2, uint64_t seed) {
    if (!is_quasi_hereditary(a, oa, seed).qh)
        fail(ErrorKind::InputNotQH, a->name + " is not quasi-hereditary with the given order");
    if (!is_quasi_hereditary(a2, o2, seed).qh)
        fail(ErrorKind::InputNotQH, a2->name + " is not quasi-hereditary with the given order");
    TensorQhResult res;
    res.algebra = tensor_algebras(a, a2);
    res.order = tensor_order(oa, o2);
    QhVerdict v = is_quasi_hereditary(res.algebra, res.order, seed);
    if (!v.qh) fail(ErrorKind::Internal, "tensor product failed the quasi-heredity check");
    res.deltas = build_delta_system(res.algebra, res.order);
    // the standard modules of the product are the tensors of the standards
    int n2 = a2->n_labels();
    for (int l = 0; l < a->n_labels(); ++l)
        for (int l2 = 0; l2 < n2; ++l2) {
            Module t = tensor_modules(standard_module(a, oa, l), standard_module(a2, o2, l2),
                                      res.algebra);
            if (!is_isomorphic(res.deltas.delta[l * n2 + l2], t, seed))
                fail(ErrorKind::Internal,
                     "standard module of the tensor product is not the tensor of standards");
        }
    return res;
}

TensorBorelResult tensor_borel(const BorelEmbedding& be, const BorelEmbedding& be2,
                               uint64_t seed) {
    if (!be.check.passed || !be2.check.passed)
        fail(ErrorKind::InputNotBorel, "tensor_borel needs two verified exact Borel subalgebras");
    AlgebraPtr big = tensor_algebras(be.emb.big, be2.emb.big);
    AlgebraPtr sub = tensor_algebras(be.emb.sub, be2.emb.sub);
    SimpleOrder order = tensor_order(be.order_big, be2.order_big);
    Embedding e = tensor_embedding(be.emb, be2.emb, sub, big);
    TensorBorelResult res;
    res.borel = check_exact_borel(e, order, seed);
    if (!res.borel.check.passed)
        fail(ErrorKind::Internal,
             "tensor of exact Borel subalgebras failed the check: " + res.borel.check.message);
    res.strong = is_strong(res.borel);
    res.strong_expected = is_strong(be) && is_strong(be2);
    return res;
}

RegularPrediction predict_tensor_regular(const AlgebraPtr& a, const SimpleOrder& oa,
                                         const AlgebraPtr& a2, const SimpleOrder& o2) {
    RegularPrediction p;
    bool a_dir = is_directed(a, oa), a2_dir = is_directed(a2, o2);
    bool aop_dir = is_directed(opposite_cached(a), oa);
    bool a2op_dir = is_directed(opposite_cached(a2), o2);
    bool a_ss = is_semisimple(*a), a2_ss = is_semisimple(*a2);
    if (a_dir && a2_dir) {
        p.regular = true;
        p.which = RegularCase::BothDirected;
    } else if (aop_dir && a2op_dir) {
        p.regular = true;
        p.which = RegularCase::BothOpDirected;
    } else if (a_ss) {
        p.regular = true;
        p.which = RegularCase::LeftSemisimple;
    } else if (a2_ss) {
        p.regular = true;
        p.which = RegularCase::RightSemisimple;
    }
    return p;
}

const char* regular_case_name(RegularCase c) {
    switch (c) {
        case RegularCase::None: return "none";
        case RegularCase::BothDirected: return "(a) both directed";
        case RegularCase::BothOpDirected: return "(b) both opposites directed";
        case RegularCase::LeftSemisimple: return "(c) left factor semisimple";
        case RegularCase::RightSemisimple: return "(d) right factor semisimple";
    }
    return "?";
}

namespace {

// B_Q = span of the basis paths inside the path algebra kQ; checked to be an
// exact Borel subalgebra of kQ with the natural vertex order.
bool basis_paths_give_borel(const Quiver& q, const std::vector<Path>& basis,
                            uint64_t seed, std::string* why) {
    BoundQuiverAlgebra kq = path_algebra(q, "kQ");
    // locate the basis paths among kq basis elements
    std::vector<Vec> vectors;
    std::vector<Idempotent> idems;
    for (const auto& p : basis) {
        int idx = -1;
        for (size_t k = 0; k < kq.basis_paths.size(); ++k)
            if (kq.basis_paths[k] == p) idx = (int)k;
        if (idx < 0) {
            if (why) *why = "basis path missing from kQ";
            return false;
        }
        vectors.push_back(vec_unit(kq.algebra->dim, idx));
        if (p.is_trivial()) idems.push_back({vectors.back(), p.source - 1});
    }
    if ((int)idems.size() != q.n_vertices) {
        if (why) *why = "basis must contain every trivial path";
        return false;
    }
    std::vector<std::string> label_names;
    for (int v = 1; v <= q.n_vertices; ++v) label_names.push_back(std::to_string(v));
    AlgebraPtr bq;
    try {
        bq = subalgebra(kq.algebra, vectors, idems, label_names, "BQ");
    } catch (const Error& e) {
        if (why) *why = e.what();
        return false;
    }
    Embedding emb{bq, kq.algebra, Matrix::from_cols(vectors)};
    try {
        BorelEmbedding be = check_exact_borel(emb, SimpleOrder::chain(q.n_vertices), seed);
        if (!be.check.passed) {
            if (why) *why = be.check.message;
            return false;
        }
    } catch (const Error& e) {
        if (why) *why = e.what();
        return false;
    }
    return true;
}

}  // namespace

std::optional<BorelWitness> projective_bimodule_split(const Embedding& left_borel,
                                                      const Bimodule& m) {
    const AlgebraPtr& A = m.left;
    const AlgebraPtr& B = left_borel.sub;
    if (left_borel.big.get() != A.get())
        fail(ErrorKind::AlgebraMismatch, "witness finder expects a Borel of the left algebra");
    Module lm = left_restrict(m);
    if (!is_projective(lm)) return std::nullopt;

    // e-aligned generators of a top slice of M as a left A-module
    Subspace rad = radical_subspace(lm);
    QuotientBasis qb = QuotientBasis::make(rad);
    QuotientResult t = quotient_module(lm, rad);
    std::vector<Vec> gens;
    for (int l = 0; l < A->n_labels(); ++l) {
        const Vec& e = A->idem_of_label(l).v;
        Matrix etop = t.module.act(e);
        Subspace img = Subspace::span_rows(etop.transpose());
        for (int k = 0; k < img.dim(); ++k) {
            Vec lift = qb.section.apply(img.basis.row(k));
            gens.push_back(lm.apply(e, lift));
        }
    }
    // N = (B, right)-sub-bimodule generated by the slice
    Bimodule restricted = restrict_left(m, B, left_borel.map);
    SubmoduleResult nsub = submodule_generated(restricted.mod, gens);
    Bimodule n{B, m.right, nsub.module};
    n.mod.name = m.mod.name + ".N";

    // phi: A (x)_B N -> M, a (x) x -> a . iota(x); iota = inclusion of N in M
    AlgebraPtr env_sub = enveloping_cached(B, m.right);
    AlgebraPtr env_big = enveloping_cached(A, m.right);
    AlgebraPtr rop = opposite_cached(m.right);
    Embedding env_emb{env_sub, env_big, kron(left_borel.map, Matrix::identity(rop->dim))};
    InduceResult ind = induce(env_emb, n.mod);
    // multiplication map on the ambient env_big (x) N space
    int amb = env_big->dim * n.dim();
    Matrix mul_map(m.dim(), amb);
    for (int g = 0; g < env_big->dim; ++g) {
        // action of env basis elt g on M composed with inclusion of N
        Matrix act_incl = m.mod.action[g].mul(nsub.inclusion);
        for (int x = 0; x < n.dim(); ++x) {
            Vec img = act_incl.col(x);
            for (int r = 0; r < m.dim(); ++r) mul_map.at(r, g * n.dim() + x) = img[r];
        }
    }
    Matrix phi = mul_map.mul(ind.section);
    if (phi.rows != phi.cols || sgn(determinant(phi)) == 0) return std::nullopt;
    if (!is_intertwiner(ind.module, m.mod, phi)) return std::nullopt;
    return BorelWitness{std::move(n), std::move(phi)};
}

SpeciesBorelResult species_borel(const SpeciesAlgebra& sa, const SpeciesBorelInput& input,
                                 uint64_t seed) {
    const SpeciesSpec& s = sa.spec;
    int nv = s.quiver.n_vertices;
    if ((int)input.vertex_borel.size() != nv)
        fail(ErrorKind::Semantic, "species_borel needs one vertex Borel per vertex");
    // verify vertex Borels
    std::vector<BorelEmbedding> vb;
    for (int v = 0; v < nv; ++v) {
        if (input.vertex_borel[v].big.get() != s.vertex_alg[v].get())
            fail(ErrorKind::AlgebraMismatch, "vertex Borel does not embed into the vertex algebra");
        vb.push_back(check_exact_borel(input.vertex_borel[v], s.vertex_order[v], seed));
        if (!vb.back().check.passed)
            fail(ErrorKind::InputNotBorel, "vertex " + std::to_string(v + 1) +
                                               " embedding is not an exact Borel subalgebra: " +
                                               vb.back().check.message);
    }

    // determine script-B
    SpeciesBorelResult res;
    std::string why;
    if (!input.basis_paths.empty()) {
        res.basis_paths = input.basis_paths;
        if (!basis_paths_give_borel(s.quiver, res.basis_paths, seed, &why))
            fail(ErrorKind::BQNotBorel, "supplied path basis: " + why);
    } else {
        std::vector<Path> trivial;
        for (int v = 1; v <= nv; ++v) trivial.push_back(trivial_path(v));
        if (basis_paths_give_borel(s.quiver, trivial, seed, &why)) {
            res.basis_paths = trivial;
        } else {
            std::vector<Path> all = enumerate_paths(s.quiver, std::max(1, nv));
            if (!basis_paths_give_borel(s.quiver, all, seed, &why))
                fail(ErrorKind::BQNotBorel,
                     "neither trivial paths nor all paths give a Borel of kQ: " + why);
            res.basis_paths = all;
        }
    }

    // witnesses per nontrivial basis path
    struct ArrowData {
        Path path;
        Bimodule n;
        Matrix iota_n;  // species-algebra coords of each N basis elt's image
    };
    std::vector<ArrowData> arrows;
    for (const auto& beta : res.basis_paths) {
        if (beta.is_trivial()) continue;
        int pb = sa.block_of_path(beta);
        if (pb < 0) fail(ErrorKind::Internal, "basis path not a block of the species algebra");
        const auto& block = sa.blocks[pb];
        int tv = beta.target, sv = beta.source;
        const AlgebraPtr &At = s.vertex_alg[tv - 1];
        const AlgebraPtr &Bt = input.vertex_borel[tv - 1].sub,
                         &Bs = input.vertex_borel[sv - 1].sub;
        // M_beta as an (A_t, B_s)-bimodule: the path block with restricted right action
        std::vector<Matrix> la, ra;
        for (int i = 0; i < At->dim; ++i)
            la.push_back(block.proj.mul(sa.left_on_t(pb, i)).mul(block.sect));
        for (int j = 0; j < Bs->dim; ++j) {
            Vec img = input.vertex_borel[sv - 1].map.col(j);
            Matrix r = Matrix::zero(block.dim, block.dim);
            for (int i = 0; i < s.vertex_alg[sv - 1]->dim; ++i)
                if (sgn(img[i]) != 0)
                    r = r.add(block.proj.mul(sa.right_on_t(pb, i)).mul(block.sect).scale(img[i]));
            ra.push_back(std::move(r));
        }
        Bimodule m_beta = make_bimodule(At, Bs, la, ra,
                                        "M(" + path_to_string(s.quiver, beta) + ")");

        BorelWitness w{Bimodule{}, Matrix()};
        std::string key = path_to_string(s.quiver, beta);
        auto it = input.witnesses.find(key);
        if (it != input.witnesses.end()) {
            w = it->second;
        } else if (Bt.get() == At.get()) {
            // identity vertex Borel: N = M restricted, phi canonical
            Bimodule n = restrict_right(restrict_left(m_beta, Bt, input.vertex_borel[tv - 1].map),
                                        Bs, Matrix::identity(Bs->dim));
            n = Bimodule{Bt, Bs, n.mod};
            AlgebraPtr env_sub = enveloping_cached(Bt, Bs);
            AlgebraPtr env_big = enveloping_cached(At, Bs);
            Embedding env_emb{env_sub, env_big,
                              kron(input.vertex_borel[tv - 1].map,
                                   Matrix::identity(opposite_cached(Bs)->dim))};
            InduceResult ind = induce(env_emb, n.mod);
            if (ind.module.dim != m_beta.dim())
                fail(ErrorKind::IsoWitnessInvalid,
                     "canonical witness failed for path " + key);
            // the canonical iso: a (x) x -> a . x
            int amb = env_big->dim * n.dim();
            Matrix mul_map(m_beta.dim(), amb);
            for (int g = 0; g < env_big->dim; ++g) {
                Matrix act = m_beta.mod.action[g];
                for (int x = 0; x < n.dim(); ++x) {
                    Vec img = act.col(x);
                    for (int r = 0; r < m_beta.dim(); ++r)
                        mul_map.at(r, g * n.dim() + x) = img[r];
                }
            }
            w.n = n;
            w.phi = mul_map.mul(ind.section);
        } else {
            auto found = projective_bimodule_split(input.vertex_borel[tv - 1], m_beta);
            if (!found)
                fail(ErrorKind::IsoWitnessInvalid,
                     "no witness supplied and the heuristic failed for path " + key);
            w = *found;
        }
        // verify the witness: phi must be a bimodule isomorphism from the induced module
        {
            AlgebraPtr env_sub = enveloping_cached(w.n.left, w.n.right);
            AlgebraPtr env_big = enveloping_cached(At, w.n.right);
            Embedding env_emb{env_sub, env_big,
                              kron(input.vertex_borel[tv - 1].map,
                                   Matrix::identity(opposite_cached(w.n.right)->dim))};
            InduceResult ind = induce(env_emb, w.n.mod);
            if (w.phi.rows != m_beta.dim() || w.phi.cols != ind.module.dim ||
                m_beta.dim() != ind.module.dim || sgn(determinant(w.phi)) == 0 ||
                !is_intertwiner(ind.module, m_beta.mod, w.phi))
                fail(ErrorKind::IsoWitnessInvalid,
                     "witness for path " + key + " is not a bimodule isomorphism");
            // iota_n: N -> species algebra coords, x -> phi(1 (x) x) in block coords
            Matrix comp = w.phi.mul(ind.f);  // block.dim x N.dim
            ArrowData ad{beta, w.n, Matrix(sa.algebra->dim, w.n.dim())};
            for (int x = 0; x < w.n.dim(); ++x) {
                Vec blockv((size_t)block.dim);
                for (int r = 0; r < block.dim; ++r) blockv[r] = comp.at(r, x);
                Vec glob = sa.embed_block(pb, blockv);
                for (int r = 0; r < sa.algebra->dim; ++r) ad.iota_n.at(r, x) = glob[r];
            }
            arrows.push_back(std::move(ad));
        }
    }

    // assemble the Borel species on Q' (same vertices, arrows = script-B)
    SpeciesSpec bs;
    bs.quiver.n_vertices = nv;
    for (size_t i = 0; i < arrows.size(); ++i)
        bs.quiver.arrows.push_back(
            {"b" + std::to_string(i), arrows[i].path.source, arrows[i].path.target});
    for (int v = 0; v < nv; ++v) {
        bs.vertex_alg.push_back(input.vertex_borel[v].sub);
        bs.vertex_order.push_back(vb[v].order_sub);
    }
    for (const auto& ad : arrows) bs.arrow_bimod.push_back(ad.n);
    SpeciesAlgebra bsa = species_algebra(bs, "B");
    res.borel_algebra = bsa.algebra;

    // embedding: on the trivial blocks the vertex embeddings; on a Q'-path
    // block the product of the per-arrow images
    Matrix emb(sa.algebra->dim, bsa.algebra->dim);
    for (size_t bb = 0; bb < bsa.blocks.size(); ++bb) {
        const auto& blk = bsa.blocks[bb];
        if (blk.path.is_trivial()) {
            int v = blk.path.source;
            const Matrix& vm = input.vertex_borel[v - 1].map;  // A_v.dim x B_v.dim
            int ablock = sa.block_of_path(trivial_path(v));
            for (int c = 0; c < blk.dim; ++c) {
                Vec img = sa.embed_block(ablock, vm.col(c));
                for (int r = 0; r < sa.algebra->dim; ++r) emb.at(r, blk.offset + c) = img[r];
            }
            continue;
        }
        // T'-level map: pure tensor (x_k, ..., x_1) -> product of images in A
        // factors left-to-right are the later arrows first
        std::vector<const ArrowData*> fs;
        for (auto it = blk.path.arrows.rbegin(); it != blk.path.arrows.rend(); ++it)
            fs.push_back(&arrows[*it]);
        int tdim = blk.tdim;
        Matrix tmap(sa.algebra->dim, tdim);
        for (int t = 0; t < tdim; ++t) {
            // decompose t into factor indices
            int rem = t;
            std::vector<int> idx(fs.size());
            for (int f = (int)fs.size() - 1; f >= 0; --f) {
                idx[f] = rem % fs[f]->n.dim();
                rem /= fs[f]->n.dim();
            }
            Vec prod;
            for (size_t f = 0; f < fs.size(); ++f) {
                Vec img = fs[f]->iota_n.col(idx[f]);
                prod = (f == 0) ? img : sa.algebra->mul(prod, img);
            }
            for (int r = 0; r < sa.algebra->dim; ++r) tmap.at(r, t) = prod[r];
        }
        Matrix blockmap = tmap.mul(blk.sect);
        // check the full T'-level kernel: every relator of the block maps to 0
        // (relators = kernel of blk.proj)
        Matrix ker = kernel_basis(blk.proj);
        Matrix kert = ker.transpose();
        if (!tmap.mul(kert).is_zero())
            fail(ErrorKind::IsoWitnessInvalid,
                 "componentwise embedding does not respect the tensor relations at " +
                     path_to_string(bs.quiver, blk.path));
        for (int c = 0; c < blk.dim; ++c)
            for (int r = 0; r < sa.algebra->dim; ++r) emb.at(r, blk.offset + c) = blockmap.at(r, c);
    }

    Embedding e{bsa.algebra, sa.algebra, emb};
    res.borel = check_exact_borel(e, sa.order, seed);
    if (!res.borel.check.passed)
        fail(ErrorKind::Internal,
             "species Borel construction failed the exact Borel check: " +
                 res.borel.check.message);
    return res;
}

TriangularResult triangular_matrix(const TriangularSpec& t, uint64_t seed) {
    if (t.m.left.get() != t.a2.get() || t.m.right.get() != t.a1.get())
        fail(ErrorKind::AlgebraMismatch, "triangular bimodule must be an (A2, A1)-bimodule");
    // M left standardly filtered over A2
    DeltaSystem ds2 = build_delta_system(t.a2, t.o2);
    if (!has_delta_filtration(left_restrict(t.m), ds2, FiltKind::Delta, seed))
        fail(ErrorKind::MNotFiltered, "M is not left standardly filtered over A2");
    SpeciesSpec s;
    s.quiver.n_vertices = 2;
    s.quiver.arrows.push_back({"m", 1, 2});
    s.vertex_alg = {t.a1, t.a2};
    s.vertex_order = {t.o1, t.o2};
    s.arrow_bimod = {t.m};
    TriangularResult res;
    res.species = species_algebra(s, "Tri");
    res.algebra = res.species.algebra;
    res.order = res.species.order;
    // quasi-heredity via the directed-quiver filtration criterion
    SpeciesQhVerdict v = species_qh_criterion(s, seed);
    if (!v.quiver_directed || !v.remark_criterion)
        fail(ErrorKind::Internal, "triangular ring failed the filtration criterion");
    return res;
}

SpeciesBorelResult triangular_borel(const TriangularResult& t, const Embedding& be1,
                                    const Embedding& be2, const Bimodule& n,
                                    const Matrix& phi, uint64_t seed) {
    SpeciesBorelInput input;
    input.vertex_borel = {be1, be2};
    input.basis_paths = enumerate_paths(t.species.spec.quiver, 1);  // e1, e2, the arrow
    Path arrow = trivial_path(1);
    arrow.arrows = {0};
    arrow.target = 2;
    input.witnesses.emplace(path_to_string(t.species.spec.quiver, arrow),
                            BorelWitness{n, phi});
    return species_borel(t.species, input, seed);
}

}  // namespace qhlab
