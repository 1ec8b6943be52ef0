// Transmission scheme builders. Each builder turns one fading block into the
// per-slot transmit precoders actually sent and the equivalent linear receive
// models seen by every receiver, with per-slot power normalized to P.
//
// The delayed-CSIT information pattern is enforced structurally: a precoder
// only ever contains channel vectors from strictly earlier slots, and the
// asymmetric builder's transmit side is a function of the legitimate channel
// history alone.
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdof/channel.hpp"
#include "sdof/complex_matrix.hpp"
#include "sdof/gaussian_mi.hpp"

namespace sdof {

enum class SchemeId {
    WiretapSymmetric3Slot,     // delayed CSIT on both channels
    WiretapAsymmetric2Slot,    // delayed CSIT on the legitimate channel only
    Bcc4Slot,                  // two confidential messages, delayed CSIT on both
    BaselinePerfectCsitWiretap,
    BaselinePerfectCsitBcc,
    BaselineNoCsit
};

inline std::size_t scheme_slots(SchemeId id) {
    switch (id) {
        case SchemeId::WiretapSymmetric3Slot: return 3;
        case SchemeId::WiretapAsymmetric2Slot: return 2;
        case SchemeId::Bcc4Slot: return 4;
        case SchemeId::BaselinePerfectCsitWiretap:
        case SchemeId::BaselinePerfectCsitBcc:
        case SchemeId::BaselineNoCsit: return 1;
    }
    throw std::invalid_argument("scheme_slots: unknown scheme");
}

inline std::string_view scheme_name(SchemeId id) {
    switch (id) {
        case SchemeId::WiretapSymmetric3Slot: return "wiretap-sym";
        case SchemeId::WiretapAsymmetric2Slot: return "wiretap-asym";
        case SchemeId::Bcc4Slot: return "bcc";
        case SchemeId::BaselinePerfectCsitWiretap: return "baseline-perfect-wiretap";
        case SchemeId::BaselinePerfectCsitBcc: return "baseline-perfect-bcc";
        case SchemeId::BaselineNoCsit: return "baseline-no-csit";
    }
    throw std::invalid_argument("scheme_name: unknown scheme");
}

inline SchemeId parse_scheme(std::string_view name) {
    for (SchemeId id : {SchemeId::WiretapSymmetric3Slot, SchemeId::WiretapAsymmetric2Slot,
                        SchemeId::Bcc4Slot, SchemeId::BaselinePerfectCsitWiretap,
                        SchemeId::BaselinePerfectCsitBcc, SchemeId::BaselineNoCsit})
        if (scheme_name(id) == name) return id;
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

// One symbol group on the transmit side: slot t radiates slot_precoders[t] * s
// from the M antennas, where s has independent entries of the given variance.
struct TransmitComponent {
    std::string label;
    double power = 0.0;                          // per-symbol variance
    std::vector<ComplexMatrix> slot_precoders;   // T matrices, antennas x symbols
};

// Per-slot scale factors alpha_t = sqrt(P / raw slot power), so each slot's
// expected radiated power is exactly P. Raw slot power is the expectation
// over the symbol distribution, sum_k power_k * ||B_{k,t}||_F^2.
inline std::vector<double> normalize_slots(std::span<const TransmitComponent> components,
                                           double total_power) {
    if (components.empty()) throw std::invalid_argument("normalize_slots: no components");
    if (!(total_power > 0.0)) throw std::invalid_argument("normalize_slots: power must be > 0");
    const std::size_t slots = components.front().slot_precoders.size();
    std::vector<double> normalizers(slots);
    for (std::size_t t = 0; t < slots; ++t) {
        double raw = 0.0;
        for (const auto& c : components) {
            if (c.slot_precoders.size() != slots)
                throw std::invalid_argument("normalize_slots: slot counts disagree");
            raw += c.power * c.slot_precoders[t].frobenius_norm_sq();
        }
        if (!(raw > 0.0)) throw std::domain_error("normalize_slots: degenerate slot with zero expected power");
        normalizers[t] = std::sqrt(total_power / raw);
    }
    return normalizers;
}

struct ReceiveComponent {
    std::string label;
    double power = 0.0;
    ComplexMatrix mixing;  // slots x symbols
};

struct SchemeRealization {
    SchemeId scheme{};
    std::size_t slots = 0;
    std::size_t antennas = 0;
    double power = 0.0;  // P
    std::vector<double> normalizers;
    std::vector<TransmitComponent> transmit;  // normalized, as radiated
    std::vector<std::pair<std::string, std::vector<ReceiveComponent>>> receivers;

    const std::vector<ReceiveComponent>& receiver(std::string_view name) const {
        for (const auto& [n, comps] : receivers)
            if (n == name) return comps;
        throw std::invalid_argument("unknown receiver '" + std::string(name) + "'");
    }

    // Realized expected transmit power of slot t (over the symbol ensemble).
    double slot_power(std::size_t t) const {
        double p = 0.0;
        for (const auto& c : transmit) p += c.power * c.slot_precoders[t].frobenius_norm_sq();
        return p;
    }

    /// Assemble the receive model with roles chosen per evaluated quantity:
    /// listed labels become useful or conditioned, everything else nuisance.
    LinearModel model(std::string_view receiver_name,
                      std::span<const std::string_view> useful,
                      std::span<const std::string_view> conditioned = {}) const {
        auto listed = [](std::span<const std::string_view> names, std::string_view l) {
            for (auto n : names)
                if (n == l) return true;
            return false;
        };
        const std::vector<ReceiveComponent>& available = receiver(receiver_name);
        for (auto want : useful) {
            bool found = false;
            for (const auto& rc : available) found |= rc.label == want;
            if (!found)
                throw std::invalid_argument("model: no component labeled '" + std::string(want) + "'");
        }
        std::vector<SignalComponent> comps;
        for (const auto& rc : available) {
            SignalRole role = SignalRole::nuisance;
            if (listed(useful, rc.label)) role = SignalRole::useful;
            else if (listed(conditioned, rc.label)) role = SignalRole::conditioned;
            comps.push_back({rc.mixing, rc.power, role, rc.label});
        }
        return LinearModel(std::move(comps), 1.0);
    }
};

namespace detail {

// Precoder sending w^T * s from the first antenna only: [w^T s, 0, ...]^T.
inline ComplexMatrix first_antenna_row(const CVector& w, std::size_t antennas) {
    ComplexMatrix b(antennas, w.size());
    for (std::size_t j = 0; j < w.size(); ++j) b(0, j) = w[j];
    return b;
}

// Precoder sending the scalar symbol from one antenna.
inline ComplexMatrix single_antenna(std::size_t antenna, std::size_t antennas) {
    ComplexMatrix b(antennas, 1);
    b(antenna, 0) = 1.0;
    return b;
}

inline CVector scaled(const CVector& v, cplx s) {
    CVector out = v;
    for (auto& e : out) e *= s;
    return out;
}

inline CVector plus(const CVector& a, const CVector& b) {
    CVector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

// Normalize raw per-slot precoders, derive every receiver's equivalent
// mixing matrices, and check the per-slot power constraint.
inline SchemeRealization assemble(SchemeId scheme, const ChannelBlock& block, double total_power,
                                  std::vector<TransmitComponent> raw,
                                  std::span<const std::pair<std::string, const std::vector<CVector>*>> channels) {
    SchemeRealization r;
    r.scheme = scheme;
    r.slots = block.slots();
    r.antennas = block.antennas;
    r.power = total_power;
    r.normalizers = normalize_slots(raw, total_power);
    for (auto& c : raw)
        for (std::size_t t = 0; t < r.slots; ++t)
            c.slot_precoders[t] = cplx(r.normalizers[t]) * c.slot_precoders[t];
    r.transmit = std::move(raw);

    for (const auto& [name, vectors] : channels) {
        std::vector<ReceiveComponent> comps;
        for (const auto& c : r.transmit) {
            ComplexMatrix mixing(r.slots, c.slot_precoders.front().cols());
            for (std::size_t t = 0; t < r.slots; ++t) {
                const CVector row = transpose_apply((*vectors)[t], c.slot_precoders[t]);
                for (std::size_t j = 0; j < row.size(); ++j) mixing(t, j) = row[j];
            }
            comps.push_back({c.label, c.power, std::move(mixing)});
        }
        r.receivers.emplace_back(name, std::move(comps));
    }

    for (std::size_t t = 0; t < r.slots; ++t)
        if (r.slot_power(t) > total_power * (1.0 + 1e-9))
            throw std::domain_error("scheme realization exceeds per-slot power constraint");
    return r;
}

inline void require_block(const ChannelBlock& block, std::size_t slots, double power) {
    if (block.antennas != 2)
        throw std::invalid_argument("scheme builders are defined for 2 transmit antennas");
    if (block.slots() != slots)
        throw std::invalid_argument("channel block has wrong slot count for this scheme");
    if (!(power > 0.0)) throw std::invalid_argument("transmit power must be > 0");
    for (std::size_t t = 0; t < slots; ++t)
        if (!ComplexMatrix::column(block.h[t]).is_finite() || !ComplexMatrix::column(block.g[t]).is_finite())
            throw std::invalid_argument("channel block has non-finite entries");
}

// Unit vector w with v^T w = 0, the zero-forcing direction for a
// transpose-acting 2-antenna channel.
inline CVector transpose_orthogonal_unit(const CVector& v) {
    const double n = std::sqrt(norm_sq(v));
    if (!(n > 0.0)) throw std::domain_error("degenerate channel: cannot zero-force");
    return {-v[1] / n, v[0] / n};
}

}  // namespace detail

/// Three-slot scheme with delayed knowledge of both channels. Slot 1 sends
/// two artificial-noise symbols u; slot 2 sends the two message symbols v on
/// top of the noise combination the intended receiver already observed
/// (h1^T u, first antenna); slot 3 re-sends, from the first antenna, the
/// noiseless signal the eavesdropper observed in slot 2 (g2^T v + g21 h1^T u),
/// reconstructed at the transmitter from its own symbols and the now-known
/// slot-2 channel. At the intended receiver the noise collapses to the single
/// combination h1^T u, leaving both message symbols resolvable; at the
/// eavesdropper the message stays inside the noise subspace.
inline SchemeRealization build_symmetric_wiretap(const ChannelBlock& block, double power) {
    detail::require_block(block, 3, power);
    const std::size_t m = block.antennas;
    const double symbol_power = power / 2.0;
    const CVector& h1 = block.h[0];
    const CVector& g2 = block.g[1];
    const cplx g21 = g2[0];

    std::vector<TransmitComponent> raw;
    raw.push_back({"u", symbol_power,
                   {ComplexMatrix::identity(m),
                    detail::first_antenna_row(h1, m),
                    detail::first_antenna_row(detail::scaled(h1, g21), m)}});
    raw.push_back({"v", symbol_power,
                   {ComplexMatrix::zero(m, 2),
                    ComplexMatrix::identity(m),
                    detail::first_antenna_row(g2, m)}});

    const std::pair<std::string, const std::vector<CVector>*> channels[] = {
        {"legitimate", &block.h}, {"eavesdropper", &block.g}};
    return detail::assemble(SchemeId::WiretapSymmetric3Slot, block, power, std::move(raw), channels);
}

/// Two-slot scheme whose transmit side reads only the legitimate channel's
/// past. Slot 1 sends artificial noise u; slot 2 sends the noise combination
/// h1^T u from antenna 1 and the single message symbol v from antenna 2.
/// The intended receiver sees a triangular 2x2 system in (h1^T u, v); the
/// eavesdropper's two observations are generically filled by the
/// two-dimensional noise, drowning the one message dimension.
inline SchemeRealization build_asymmetric_wiretap(const ChannelBlock& block, double power) {
    detail::require_block(block, 2, power);
    const std::size_t m = block.antennas;
    const double symbol_power = power / 2.0;
    const CVector& h1 = block.h[0];

    std::vector<TransmitComponent> raw;
    raw.push_back({"u", symbol_power,
                   {ComplexMatrix::identity(m), detail::first_antenna_row(h1, m)}});
    raw.push_back({"v", symbol_power,
                   {ComplexMatrix::zero(m, 1), detail::single_antenna(1, m)}});

    const std::pair<std::string, const std::vector<CVector>*> channels[] = {
        {"legitimate", &block.h}, {"eavesdropper", &block.g}};
    return detail::assemble(SchemeId::WiretapAsymmetric2Slot, block, power, std::move(raw), channels);
}

/// Four-slot broadcast scheme carrying two confidential two-symbol messages
/// v1 (receiver 1) and v2 (receiver 2) behind shared artificial noise u.
/// Slot 1: noise. Slot 2: v1 over the noise combination receiver 1 already
/// saw (h1^T u). Slot 3: v2 over the one receiver 2 already saw (g1^T u).
/// Slot 4 re-sends, from antenna 1, the sum of the two slot-2/3 crossover
/// observations (g2^T v1 at receiver 2 and h3^T v2 at receiver 1, noise terms
/// included), reconstructed from delayed channel knowledge. Each receiver
/// then holds four observations in which the unintended message stays aligned
/// with the noise in two dimensions while its own message spans the rest.
inline SchemeRealization build_bcc(const ChannelBlock& block, double power) {
    detail::require_block(block, 4, power);
    const std::size_t m = block.antennas;
    const double symbol_power = power / 3.0;
    const CVector& h1 = block.h[0];
    const CVector& g1 = block.g[0];
    const CVector& g2 = block.g[1];
    const CVector& h3 = block.h[2];
    const cplx g21 = g2[0];
    const cplx h31 = h3[0];

    // Slot-4 noise coefficient: h31 g1 + g21 h1.
    const CVector cross = detail::plus(detail::scaled(g1, h31), detail::scaled(h1, g21));

    std::vector<TransmitComponent> raw;
    raw.push_back({"u", symbol_power,
                   {ComplexMatrix::identity(m),
                    detail::first_antenna_row(h1, m),
                    detail::first_antenna_row(g1, m),
                    detail::first_antenna_row(cross, m)}});
    raw.push_back({"v1", symbol_power,
                   {ComplexMatrix::zero(m, 2),
                    ComplexMatrix::identity(m),
                    ComplexMatrix::zero(m, 2),
                    detail::first_antenna_row(g2, m)}});
    raw.push_back({"v2", symbol_power,
                   {ComplexMatrix::zero(m, 2),
                    ComplexMatrix::zero(m, 2),
                    ComplexMatrix::identity(m),
                    detail::first_antenna_row(h3, m)}});

    const std::pair<std::string, const std::vector<CVector>*> channels[] = {
        {"receiver1", &block.h}, {"receiver2", &block.g}};
    return detail::assemble(SchemeId::Bcc4Slot, block, power, std::move(raw), channels);
}

/// Single-slot zero-forcing reference with instantaneous channel knowledge:
/// the message rides the direction the eavesdropper cannot hear and the
/// artificial noise the direction the intended receiver cannot hear.
inline SchemeRealization build_baseline_perfect_csit_wiretap(const ChannelBlock& block, double power) {
    detail::require_block(block, 1, power);
    std::vector<TransmitComponent> raw;
    raw.push_back({"v", power / 2.0,
                   {ComplexMatrix::column(detail::transpose_orthogonal_unit(block.g[0]))}});
    raw.push_back({"u", power / 2.0,
                   {ComplexMatrix::column(detail::transpose_orthogonal_unit(block.h[0]))}});
    const std::pair<std::string, const std::vector<CVector>*> channels[] = {
        {"legitimate", &block.h}, {"eavesdropper", &block.g}};
    return detail::assemble(SchemeId::BaselinePerfectCsitWiretap, block, power, std::move(raw), channels);
}

/// Two-user zero-forcing reference: each message is beamformed into the null
/// direction of the other user's instantaneous channel, so it arrives at the
/// unintended receiver with exactly zero coefficient.
inline SchemeRealization build_baseline_perfect_csit_bcc(const ChannelBlock& block, double power) {
    detail::require_block(block, 1, power);
    std::vector<TransmitComponent> raw;
    raw.push_back({"v1", power / 2.0,
                   {ComplexMatrix::column(detail::transpose_orthogonal_unit(block.g[0]))}});
    raw.push_back({"v2", power / 2.0,
                   {ComplexMatrix::column(detail::transpose_orthogonal_unit(block.h[0]))}});
    const std::pair<std::string, const std::vector<CVector>*> channels[] = {
        {"receiver1", &block.h}, {"receiver2", &block.g}};
    return detail::assemble(SchemeId::BaselinePerfectCsitBcc, block, power, std::move(raw), channels);
}

/// Isotropic single-slot reference using no channel knowledge and no
/// artificial noise: both receivers observe the message equally well.
inline SchemeRealization build_baseline_no_csit(const ChannelBlock& block, double power) {
    detail::require_block(block, 1, power);
    const std::size_t m = block.antennas;
    std::vector<TransmitComponent> raw;
    raw.push_back({"v", power / 2.0, {ComplexMatrix::identity(m)}});
    const std::pair<std::string, const std::vector<CVector>*> channels[] = {
        {"legitimate", &block.h}, {"eavesdropper", &block.g}};
    return detail::assemble(SchemeId::BaselineNoCsit, block, power, std::move(raw), channels);
}

inline SchemeRealization build_scheme(SchemeId id, const ChannelBlock& block, double power) {
    switch (id) {
        case SchemeId::WiretapSymmetric3Slot: return build_symmetric_wiretap(block, power);
        case SchemeId::WiretapAsymmetric2Slot: return build_asymmetric_wiretap(block, power);
        case SchemeId::Bcc4Slot: return build_bcc(block, power);
        case SchemeId::BaselinePerfectCsitWiretap: return build_baseline_perfect_csit_wiretap(block, power);
        case SchemeId::BaselinePerfectCsitBcc: return build_baseline_perfect_csit_bcc(block, power);
        case SchemeId::BaselineNoCsit: return build_baseline_no_csit(block, power);
    }
    throw std::invalid_argument("build_scheme: unknown scheme");
}

}  // namespace sdof
