#include "icdfa/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

#include <omp.h>

#include "icdfa/count.hpp"
#include "icdfa/generate.hpp"
#include "icdfa/validate.hpp"

namespace icdfa {

TextParseError::TextParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                  : what),
      line_(line) {}

namespace {

void append_int(std::string& out, int v) {
    char buf[16];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, end);
}

// Pulls whitespace-separated decimal integers off a view.
class IntScanner {
public:
    explicit IntScanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    // Returns the next non-space char without consuming it, or '\0'.
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void consume(char c) { if (peek() == c) ++pos_; }

    std::optional<int> next_int() {
        skip_ws();
        int value = 0;
        auto [ptr, ec] =
            std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{} || ptr == text_.data() + pos_) {
            return std::nullopt;
        }
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string format_string_line(const CanonicalString& s) {
    std::string out;
    out.reserve(8 + s.cells.size() * 3);
    append_int(out, s.n);
    out.push_back(' ');
    append_int(out, s.k);
    out += " :";
    for (int c : s.cells) {
        out.push_back(' ');
        append_int(out, c);
    }
    return out;
}

std::string format_normal_form_line(const NormalForm& nf) {
    std::string out = format_string_line(nf.string);
    if (!nf.finals.empty()) {
        out += " |";
        for (int f : nf.finals) {
            out.push_back(' ');
            append_int(out, f);
        }
    }
    return out;
}

ParsedStringLine parse_string_line(std::string_view line) {
    IntScanner scan(line);
    auto n = scan.next_int();
    auto k = scan.next_int();
    if (!n || !k) {
        throw TextParseError(0, "expected `<n> <k> : <cells...>`");
    }
    if (*n < 1 || *k < 1) {
        throw TextParseError(0, "n and k must be at least 1");
    }
    if (scan.peek() != ':') {
        throw TextParseError(0, "expected `:` after n and k");
    }
    scan.consume(':');
    ParsedStringLine out;
    out.string.n = *n;
    out.string.k = *k;
    const std::size_t want = static_cast<std::size_t>(*n) * *k;
    // The claimed size is untrusted; let the vector grow instead of
    // preallocating something huge for a line that cannot deliver it.
    out.string.cells.reserve(std::min<std::size_t>(want, 1u << 16));
    while (out.string.cells.size() < want) {
        auto cell = scan.next_int();
        if (!cell) {
            throw TextParseError(0, "expected " + std::to_string(want) + " cells, got " +
                                        std::to_string(out.string.cells.size()));
        }
        if (*cell < 0 || *cell >= *n) {
            throw TextParseError(0, "cell value " + std::to_string(*cell) +
                                        " outside [0, " + std::to_string(*n - 1) + "]");
        }
        out.string.cells.push_back(*cell);
    }
    if (scan.peek() == '|') {
        scan.consume('|');
        while (!scan.at_end()) {
            auto f = scan.next_int();
            if (!f) {
                throw TextParseError(0, "bad final state list");
            }
            if (*f < 0 || *f >= *n) {
                throw TextParseError(0, "final state " + std::to_string(*f) +
                                            " outside [0, " + std::to_string(*n - 1) + "]");
            }
            out.finals.push_back(*f);
        }
        std::sort(out.finals.begin(), out.finals.end());
        if (std::adjacent_find(out.finals.begin(), out.finals.end()) != out.finals.end()) {
            throw TextParseError(0, "duplicate final state");
        }
    } else if (!scan.at_end()) {
        throw TextParseError(0, "trailing garbage after cells");
    }
    return out;
}

namespace {

struct DocLine {
    int number = 0;
    std::string text;
};

// Next content line: blank lines and `#` comments skipped.
std::optional<DocLine> next_content_line(std::istream& in, int& line_no) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::size_t start = raw.find_first_not_of(" \t\r");
        if (start == std::string::npos || raw[start] == '#') {
            continue;
        }
        return DocLine{line_no, raw};
    }
    return std::nullopt;
}

// `<key>: rest` -> rest; throws when the key does not match.
std::string expect_key(const DocLine& line, std::string_view key) {
    std::size_t start = line.text.find_first_not_of(" \t");
    std::string_view body(line.text);
    body.remove_prefix(start);
    if (body.substr(0, key.size()) != key) {
        throw TextParseError(line.number,
                             "expected `" + std::string(key) + "`");
    }
    return std::string(body.substr(key.size()));
}

int parse_single_int(const DocLine& line, std::string_view key) {
    const std::string rest = expect_key(line, key);
    IntScanner scan(rest);
    auto v = scan.next_int();
    if (!v || !scan.at_end()) {
        throw TextParseError(line.number,
                             "expected one integer after `" + std::string(key) + "`");
    }
    return *v;
}

}  // namespace

Dfa parse_dfa_document(std::istream& in) {
    int line_no = 0;
    auto need = [&](std::string_view what) -> DocLine {
        auto line = next_content_line(in, line_no);
        if (!line) {
            throw TextParseError(line_no, "unexpected end of input, wanted " +
                                              std::string(what));
        }
        return *line;
    };

    Dfa dfa;
    dfa.structure.n = parse_single_int(need("`states:`"), "states:");
    dfa.structure.k = parse_single_int(need("`symbols:`"), "symbols:");
    if (dfa.structure.n < 1 || dfa.structure.k < 1) {
        throw TextParseError(line_no, "states and symbols must be at least 1");
    }
    {
        DocLine line = need("`initial:`");
        dfa.structure.initial = parse_single_int(line, "initial:");
        if (dfa.structure.initial < 0 || dfa.structure.initial >= dfa.structure.n) {
            throw TextParseError(line.number, "initial state out of range");
        }
    }

    {
        DocLine line = need("`finals:`");
        const std::string rest = expect_key(line, "finals:");
        IntScanner scan(rest);
        while (!scan.at_end()) {
            auto f = scan.next_int();
            if (!f) {
                throw TextParseError(line.number, "bad final state list");
            }
            if (*f < 0 || *f >= dfa.structure.n) {
                throw TextParseError(line.number, "final state " + std::to_string(*f) +
                                                      " out of range");
            }
            dfa.finals.push_back(*f);
        }
        std::sort(dfa.finals.begin(), dfa.finals.end());
        dfa.finals.erase(std::unique(dfa.finals.begin(), dfa.finals.end()),
                         dfa.finals.end());
    }

    {
        DocLine line = need("`table:`");
        const std::string rest = expect_key(line, "table:");
        IntScanner scan(rest);
        if (!scan.at_end()) {
            throw TextParseError(line.number, "table rows start on the next line");
        }
    }
    dfa.structure.delta.reserve(std::min<std::size_t>(
        static_cast<std::size_t>(dfa.structure.n) * dfa.structure.k, 1u << 16));
    for (int q = 0; q < dfa.structure.n; ++q) {
        DocLine row = need("a table row");
        IntScanner scan(row.text);
        for (int sym = 0; sym < dfa.structure.k; ++sym) {
            auto t = scan.next_int();
            if (!t) {
                throw TextParseError(row.number,
                                     "row for state " + std::to_string(q) + " needs " +
                                         std::to_string(dfa.structure.k) + " targets");
            }
            if (*t < 0 || *t >= dfa.structure.n) {
                throw TextParseError(row.number, "target " + std::to_string(*t) +
                                                     " out of range");
            }
            dfa.structure.delta.push_back(*t);
        }
        if (!scan.at_end()) {
            throw TextParseError(row.number, "too many targets in row for state " +
                                                 std::to_string(q));
        }
    }
    if (auto extra = next_content_line(in, line_no)) {
        throw TextParseError(extra->number, "unexpected content after the table");
    }
    try {
        check_well_formed(dfa);
    } catch (const StructuralError& e) {
        throw TextParseError(line_no, e.what());
    }
    return dfa;
}

Dfa parse_dfa_document_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dfa_document(in);
}

namespace {

void append_line(std::string& out, const CanonicalString& s) {
    out += format_string_line(s);
    out.push_back('\n');
}

EmitStats emit_serial(int n, int k, const std::optional<CanonicalString>& from,
                      std::optional<std::uint64_t> limit, const LineSink& sink) {
    EmitStats stats;
    std::string buf;
    generate_all(n, k, from, limit, [&](const CanonicalString& s) {
        buf.clear();
        append_line(buf, s);
        sink(buf.data(), buf.size());
        ++stats.emitted;
    });
    return stats;
}

}  // namespace

EmitStats emit_string_lines(int n, int k,
                            const std::optional<CanonicalString>& from,
                            std::optional<std::uint64_t> limit, int jobs,
                            const LineSink& sink) {
    if (jobs <= 1) {
        return emit_serial(n, k, from, limit, sink);
    }
    if (from) {
        require_valid(*from);
        if (from->n != n || from->k != k) {
            throw StructuralError("resumption string has mismatched (n, k)");
        }
    }
    BigCount begin = from ? BigCount(rank(*from) + 1) : BigCount(0);
    BigCount end = count_icdfa(n, k);
    if (limit && end - begin > *limit) {
        end = begin + *limit;
    }
    if (begin >= end) {
        return EmitStats{};
    }
    const BigCount span = end - begin;
    // More ranges than workers keeps the ordered drain busy while bounding
    // how much rendered output is held in memory at once.
    int parts = jobs * 4;
    if (span < parts) {
        parts = static_cast<int>(span.get_ui());
    }
    std::vector<RankRange> ranges;
    ranges.reserve(static_cast<std::size_t>(parts));
    for (int p = 0; p < parts; ++p) {
        RankRange r{begin + (span * p) / parts, begin + (span * (p + 1)) / parts};
        if (r.end > r.begin) {
            ranges.push_back(std::move(r));
        }
    }
    EmitStats stats;
    const int count = static_cast<int>(ranges.size());
#pragma omp parallel for ordered schedule(dynamic, 1) num_threads(jobs)
    for (int p = 0; p < count; ++p) {
        const RankRange& range = ranges[static_cast<std::size_t>(p)];
        BigCount todo = range.end - range.begin;
        std::string buf;
        Generator gen = Generator::at(unrank(range.begin, n, k));
        while (sgn(todo) > 0) {
            append_line(buf, gen.current());
            --todo;
            if (sgn(todo) > 0) {
                gen.advance();
            }
        }
#pragma omp ordered
        {
            sink(buf.data(), buf.size());
            stats.emitted += static_cast<std::uint64_t>(
                mpz_get_ui(BigCount(range.end - range.begin).get_mpz_t()));
        }
    }
    return stats;
}

}  // namespace icdfa
