// Normalized chains of a simplicial set as a dg coalgebra with the
// front-face/back-face coproduct.
#pragma once

#include "hocolim/dga.hpp"
#include "hocolim/simplicial.hpp"

#include <numeric>

namespace hocolim {

// Basis element of the chain coalgebra attached to a nondegenerate generator.
// Generators and chain labels share the (dim, id) order, so the index within
// a degree is the position within generators_of_dim.
inline BasisRef chain_ref(const SimplicialSet& k, int gen) {
    const auto& layer = k.generators_of_dim(k.gen(gen).dim);
    for (std::size_t i = 0; i < layer.size(); ++i)
        if (layer[i] == gen) return BasisRef{k.gen(gen).dim, static_cast<int>(i)};
    throw std::logic_error("generator not found in its dimension layer");
}
inline int chain_gen(const SimplicialSet& k, const BasisRef& r) {
    return k.generators_of_dim(r.deg).at(r.idx);
}

// degenerate simplices vanish in normalized chains
inline std::optional<BasisRef> chain_of_simplex(const SimplicialSet& k, const SimplexRef& r) {
    if (r.degenerate()) return std::nullopt;
    return chain_ref(k, r.base);
}

template <Scalar K>
DgCoalgebra<K> normalized_chains(const SimplicialSet& k) {
    int top = std::max(k.max_dim(), 0);
    DgCoalgebra<K> c;
    c.cx = BoundedComplex<K>(0, top);
    for (int d = 0; d <= top; ++d)
        for (int g : k.generators_of_dim(d)) c.cx.add_element(d, k.gen(g).id);
    c.cx.finalize_basis();
    c.cop.resize(top + 1);
    for (int d = 0; d <= top; ++d) c.cop[d].resize(c.cx.dim(d));

    for (int d = 1; d <= top; ++d) {
        const auto& layer = k.generators_of_dim(d);
        for (std::size_t i = 0; i < layer.size(); ++i) {
            SimplexRef r{layer[i], {}};
            Lin<K> dr;
            for (int face = 0; face <= d; ++face)
                if (auto t = chain_of_simplex(k, k.face(r, face)))
                    lin_add(dr, *t, sign_pow<K>(face));
            c.cx.set_diff_column(BasisRef{d, static_cast<int>(i)}, dr);
        }
    }

    for (int d = 0; d <= top; ++d) {
        const auto& layer = k.generators_of_dim(d);
        for (std::size_t i = 0; i < layer.size(); ++i) {
            int g = layer[i];
            auto& terms = c.cop[d][i];
            for (int p = 0; p <= d; ++p) {
                std::vector<int> front(p + 1), back(d - p + 1);
                std::iota(front.begin(), front.end(), 0);
                std::iota(back.begin(), back.end(), p);
                auto l = chain_of_simplex(k, k.apply(g, front));
                auto r = chain_of_simplex(k, k.apply(g, back));
                if (l && r) terms.push_back({*l, *r, K(1)});
            }
        }
    }

    c.counit0.assign(c.cx.dim(0), K(1));
    if (k.one_vertex()) c.coaug = BasisRef{0, 0};
    return c;
}

}  // namespace hocolim
