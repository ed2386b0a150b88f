#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "omnisig/generating_vector.hpp"
#include "omnisig/group.hpp"
#include "omnisig/search.hpp"
#include "omnisig/signature.hpp"

namespace omnisig {

/// A group together with a signature it realizes and the witness vector.
struct RealizedAction {
    FiniteGroup group;
    Signature signature;
    GeneratingVector vector;
};

/// Cyclic action of order 4s+2 with signature (0; 2, 2s+1, 4s+2) and the
/// closed-form vector (g^{2s+1}, g^{2s}, g).
inline RealizedAction construction_kulkarni(std::int64_t sigma) {
    if (sigma < 2) throw std::invalid_argument("construction_kulkarni: sigma must be >= 2");
    FiniteGroup g = FiniteGroup::cyclic(4 * sigma + 2);
    Signature sig(0, {2, 2 * sigma + 1, 4 * sigma + 2});
    const int gen = g.generator_indices()[0];
    GeneratingVector vec;
    vec.elliptic = {g.power(gen, 2 * sigma + 1), g.power(gen, 2 * sigma), gen};
    const VerifyResult check = verify(g, vec, sig);
    if (!check.ok)
        throw std::logic_error("construction_kulkarni: vector fails verify: " + check.detail);
    return {std::move(g), std::move(sig), std::move(vec)};
}

/// Abelian action of order 4s+4 by C_2 x C_{2s+2} with signature
/// (0; 2, 2s+2, 2s+2); the witness comes from search.
inline RealizedAction construction_breuer_abelian(std::int64_t sigma) {
    if (sigma < 2)
        throw std::invalid_argument("construction_breuer_abelian: sigma must be >= 2");
    FiniteGroup g =
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2 * sigma + 2));
    Signature sig(0, {2, 2 * sigma + 2, 2 * sigma + 2});
    SearchResult result = search(g, sig);
    if (result.status != SearchStatus::found)
        throw std::logic_error("construction_breuer_abelian: no vector found for sigma = " +
                               std::to_string(sigma));
    return {std::move(g), std::move(sig), std::move(*result.witness)};
}

/// The four vectors behind the omnipersistent actual signatures:
///   C_{s-1}     (2; -)                 (x, e, x, e)
///   D_{s-1}     (1; 2,2)               (x, e, y, y)
///   D_{s-1}     (0; 2,2,2,2,2,2)       (y, y, xy, xy, y, y)
///   D_{2(s-1)}  (0; 2,2,2,2,2)         (xy, xy, y, y x^{s-1}, x^{s-1})
inline std::array<RealizedAction, 4> constructions_omnipersistent(std::int64_t sigma) {
    if (sigma < 2)
        throw std::invalid_argument("constructions_omnipersistent: sigma must be >= 2");
    const std::int64_t n = sigma - 1;

    FiniteGroup cyc = FiniteGroup::cyclic(n);
    const int cx = cyc.generator_indices()[0];
    const int ce = cyc.identity();
    GeneratingVector fixed_point_free;
    fixed_point_free.pairs = {{cx, ce}, {cx, ce}};
    RealizedAction a0{std::move(cyc), Signature(2, {}), std::move(fixed_point_free)};

    FiniteGroup dih = FiniteGroup::dihedral(n);
    const int dx = dih.generator_indices()[0];
    const int dy = dih.generator_indices()[1];
    const int de = dih.identity();
    const int dxy = dih.mul(dx, dy);

    GeneratingVector one_handle;
    one_handle.pairs = {{dx, de}};
    one_handle.elliptic = {dy, dy};
    RealizedAction a1{dih, Signature(1, {2, 2}), std::move(one_handle)};

    GeneratingVector six_twos;
    six_twos.elliptic = {dy, dy, dxy, dxy, dy, dy};
    RealizedAction a2{std::move(dih), Signature(0, {2, 2, 2, 2, 2, 2}), std::move(six_twos)};

    FiniteGroup dih2 = FiniteGroup::dihedral(2 * n);
    const int ex = dih2.generator_indices()[0];
    const int ey = dih2.generator_indices()[1];
    const int exy = dih2.mul(ex, ey);
    const int ehalf = dih2.power(ex, n); // x^{s-1}, the order-2 rotation
    GeneratingVector five_twos;
    five_twos.elliptic = {exy, exy, ey, dih2.mul(ey, ehalf), ehalf};
    RealizedAction a3{std::move(dih2), Signature(0, {2, 2, 2, 2, 2}), std::move(five_twos)};

    std::array<RealizedAction, 4> out{std::move(a0), std::move(a1), std::move(a2),
                                      std::move(a3)};
    for (const RealizedAction& action : out) {
        const VerifyResult check = verify(action.group, action.vector, action.signature);
        if (!check.ok)
            throw std::logic_error("constructions_omnipersistent: " + action.group.name() +
                                   " " + format_signature(action.signature) +
                                   " fails verify: " + check.detail);
    }
    return out;
}

} // namespace omnisig
