#include "icdfa/validate.hpp"

#include <sstream>

namespace icdfa {

void check_well_formed(const CanonicalString& s) {
    if (s.n < 1 || s.k < 1) {
        throw StructuralError("canonical string needs n >= 1 and k >= 1");
    }
    const std::size_t want = static_cast<std::size_t>(s.k) * s.n;
    if (s.cells.size() != want) {
        std::ostringstream msg;
        msg << "canonical string for n=" << s.n << ", k=" << s.k << " needs "
            << want << " cells, got " << s.cells.size();
        throw StructuralError(msg.str());
    }
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
        if (s.cells[i] < 0 || s.cells[i] >= s.n) {
            std::ostringstream msg;
            msg << "cell " << i << " holds " << s.cells[i]
                << ", outside [0, " << s.n - 1 << "]";
            throw StructuralError(msg.str());
        }
    }
}

void check_well_formed(const DfaStructure& d) {
    if (d.n < 1 || d.k < 1) {
        throw StructuralError("structure needs n >= 1 and k >= 1");
    }
    const std::size_t want = static_cast<std::size_t>(d.k) * d.n;
    if (d.delta.size() != want) {
        std::ostringstream msg;
        msg << "transition table for n=" << d.n << ", k=" << d.k << " needs "
            << want << " entries, got " << d.delta.size();
        throw StructuralError(msg.str());
    }
    for (std::size_t i = 0; i < d.delta.size(); ++i) {
        if (d.delta[i] < 0 || d.delta[i] >= d.n) {
            std::ostringstream msg;
            msg << "transition entry " << i << " targets " << d.delta[i]
                << ", outside [0, " << d.n - 1 << "]";
            throw StructuralError(msg.str());
        }
    }
    if (d.initial < 0 || d.initial >= d.n) {
        throw StructuralError("initial state out of range");
    }
}

void check_well_formed(const Dfa& d) {
    check_well_formed(d.structure);
    int prev = -1;
    for (int f : d.finals) {
        if (f < 0 || f >= d.structure.n) {
            throw StructuralError("final state out of range");
        }
        if (f <= prev) {
            throw StructuralError("final states must be strictly increasing");
        }
        prev = f;
    }
}

std::string Validity::describe() const {
    switch (violated) {
        case Rule::none:
            return "valid";
        case Rule::r1: {
            std::ostringstream msg;
            msg << "violates R1 at index " << index << ": label " << label
                << " appears before label " << label - 1;
            return msg.str();
        }
        case Rule::r2: {
            std::ostringstream msg;
            msg << "violates R2 for label " << label << ": no occurrence before index "
                << index;
            return msg.str();
        }
    }
    return "valid";
}

InvalidStringError::InvalidStringError(const Validity& report)
    : std::runtime_error("invalid canonical string: " + report.describe()),
      report_(report) {}

Validity validate(const CanonicalString& s) {
    check_well_formed(s);
    // Single scan. mx is the largest label seen so far; label 0 counts as
    // seen from the start (it is the initial state). Label mx+1 is overdue
    // once the scan passes index k*(mx+1) - 1.
    int mx = 0;
    const int total = s.k * s.n;
    for (int i = 0; i < total; ++i) {
        if (mx < s.n - 1 && i >= s.k * (mx + 1)) {
            return Validity{Rule::r2, s.k * (mx + 1), mx + 1};
        }
        const int v = s.cells[static_cast<std::size_t>(i)];
        if (v > mx + 1) {
            return Validity{Rule::r1, i, v};
        }
        if (v == mx + 1) {
            mx = v;
        }
    }
    if (mx < s.n - 1) {
        // Unreachable for well-formed sizes; kept as a guard.
        return Validity{Rule::r2, s.k * (mx + 1), mx + 1};
    }
    return Validity{};
}

void require_valid(const CanonicalString& s) {
    const Validity v = validate(s);
    if (!v.ok()) {
        throw InvalidStringError(v);
    }
}

FlagSequence flags_of(const CanonicalString& s) {
    require_valid(s);
    FlagSequence fs{s.n, s.k, {}};
    fs.flags.reserve(static_cast<std::size_t>(s.n) - 1);
    int mx = 0;
    for (int i = 0; i < s.k * s.n && mx < s.n - 1; ++i) {
        if (s.cells[static_cast<std::size_t>(i)] == mx + 1) {
            fs.flags.push_back(i);
            ++mx;
        }
    }
    return fs;
}

void check_flag_sequence(const FlagSequence& fs) {
    if (fs.n < 1 || fs.k < 1) {
        throw StructuralError("flag sequence needs n >= 1 and k >= 1");
    }
    if (fs.flags.size() != static_cast<std::size_t>(fs.n) - 1) {
        std::ostringstream msg;
        msg << "flag sequence for n=" << fs.n << " needs " << fs.n - 1
            << " flags, got " << fs.flags.size();
        throw StructuralError(msg.str());
    }
    int prev = -1;
    for (std::size_t j = 1; j < fs.flags.size() + 1; ++j) {
        const int f = fs.flags[j - 1];
        if (f <= prev) {
            throw StructuralError("flags must be strictly increasing");
        }
        if (f < static_cast<int>(j) - 1 || f > fs.k * static_cast<int>(j) - 1) {
            std::ostringstream msg;
            msg << "flag " << j << " = " << f << " outside [" << j - 1 << ", "
                << fs.k * static_cast<int>(j) - 1 << "]";
            throw StructuralError(msg.str());
        }
        prev = f;
    }
}

}  // namespace icdfa
