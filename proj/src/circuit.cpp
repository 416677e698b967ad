#include "neqr/circuit.hpp"

#include "neqr/error.hpp"
#include "neqr/transform.hpp"

namespace neqr {

const char* to_string(CostModel model) {
    return model == CostModel::McnotPlain ? "plain" : "reset";
}

Circuit synthesize_esop(const ImagePlanes& planes) {
    Circuit c;
    c.n = planes.n;
    c.q = planes.q;
    c.form = CircuitForm::Esop;
    c.gates.resize(planes.q);

    const uint32_t full = static_cast<uint32_t>((uint64_t{1} << (2 * planes.n)) - 1);
    for (uint32_t i = 0; i < planes.q; ++i) {
        auto& out = c.gates[i];
        out.reserve(planes.planes[i].popcount());
        planes.planes[i].for_each_set_bit([&](size_t k) {
            const auto mask = static_cast<uint32_t>(k);
            out.push_back({mask, static_cast<uint32_t>(~mask) & full});
        });
    }
    return c;
}

Circuit synthesize_pprm(const ImagePlanes& planes) {
    Circuit c;
    c.n = planes.n;
    c.q = planes.q;
    c.form = CircuitForm::Pprm;
    c.gates.resize(planes.q);

    for (uint32_t i = 0; i < planes.q; ++i) {
        CoefficientVector v;
        v.m = 2 * planes.n;
        v.kind = Basis::Minterm;
        v.bits = planes.planes[i];
        const CoefficientVector b = pprm_forward(v);

        auto& out = c.gates[i];
        out.reserve(b.bits.popcount());
        b.bits.for_each_set_bit([&](size_t j) {
            out.push_back({static_cast<uint32_t>(j), 0});
        });
    }
    return c;
}

uint64_t qc_gate(int m_controls, CostModel model) {
    if (m_controls < 0) {
        raise(ErrorKind::NegativeControlCount, std::to_string(m_controls) + " controls");
    }
    if (m_controls <= 1) {
        return 1; // bare X or CNOT
    }
    if (model == CostModel::McnotPlain) {
        return 3 * (uint64_t{1} << m_controls) - 4;
    }
    return 19 * static_cast<uint64_t>(m_controls) - 32;
}

uint64_t circuit_cost(const Circuit& c, CostModel model, bool count_polarity_x) {
    uint64_t total = 0;
    for (const auto& plane : c.gates) {
        for (const ProductTerm& g : plane) {
            total += qc_gate(static_cast<int>(g.control_count()), model);
            if (count_polarity_x) {
                total += 2ull * static_cast<unsigned>(std::popcount(g.negative_mask));
            }
        }
    }
    return total;
}

std::string export_qasm(const Circuit& c) {
    const unsigned m = 2 * c.n;
    std::string out;
    out += "OPENQASM 3.0;\n";
    out += "include \"stdgates.inc\";\n";
    out += "qubit[" + std::to_string(m) + "] coord;\n";
    out += "qubit[" + std::to_string(c.q) + "] gray;\n";
    for (unsigned i = 0; i < m; ++i) {
        out += "h coord[" + std::to_string(i) + "];\n";
    }
    for (uint32_t plane = 0; plane < c.q; ++plane) {
        const std::string target = "gray[" + std::to_string(plane) + "];\n";
        for (const ProductTerm& g : c.gates[plane]) {
            const int np = std::popcount(g.positive_mask);
            const int nn = std::popcount(g.negative_mask);
            if (np + nn == 0) {
                out += "x " + target;
                continue;
            }
            if (nn > 0) {
                out += "negctrl(" + std::to_string(nn) + ") @ ";
            }
            if (np > 0) {
                out += "ctrl(" + std::to_string(np) + ") @ ";
            }
            out += "x ";
            // Operands follow modifier order: negative controls, positive
            // controls, target; qubit indices descending within each group.
            for (int i = static_cast<int>(m) - 1; i >= 0; --i) {
                if ((g.negative_mask >> i) & 1u) {
                    out += "coord[" + std::to_string(i) + "], ";
                }
            }
            for (int i = static_cast<int>(m) - 1; i >= 0; --i) {
                if ((g.positive_mask >> i) & 1u) {
                    out += "coord[" + std::to_string(i) + "], ";
                }
            }
            out += target;
        }
    }
    return out;
}

} // namespace neqr
