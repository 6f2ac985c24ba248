#pragma once

#include <string>

#include "icdfa/types.hpp"

namespace icdfa {

enum class Rule { none, r1, r2 };

/// Outcome of checking rules R1 and R2 on a well-formed string, reporting the
/// first violation encountered in a left-to-right scan.
///
/// R1: a label may only appear after its predecessor has appeared, so each
///     new maximum must be exactly old-maximum + 1. On violation, `index` is
///     the offending cell and `label` its value.
/// R2: label m must occur somewhere in the first k*m cells. On violation,
///     `label` is the missing label and `index` = k*label, the first position
///     at which the absence is decided.
struct Validity {
    Rule violated = Rule::none;
    int index = -1;
    int label = -1;

    bool ok() const { return violated == Rule::none; }
    std::string describe() const;

    bool operator==(const Validity&) const = default;
};

/// Checks R1 and R2. Throws StructuralError on malformed input; rule
/// violations are reported in the returned value, never thrown.
Validity validate(const CanonicalString& s);

/// Raised by operations whose precondition is a valid string; carries the
/// offending validity report.
class InvalidStringError : public std::runtime_error {
public:
    explicit InvalidStringError(const Validity& report);
    const Validity& report() const { return report_; }

private:
    Validity report_;
};

/// Throws InvalidStringError unless validate(s) is clean.
void require_valid(const CanonicalString& s);

/// First-occurrence indices of labels 1..n-1. Requires a valid string.
FlagSequence flags_of(const CanonicalString& s);

/// Throws StructuralError unless fs is strictly increasing with
/// j-1 <= fs.flags[j-1] <= k*j - 1 for every j.
void check_flag_sequence(const FlagSequence& fs);

}  // namespace icdfa
