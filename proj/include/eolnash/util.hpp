#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eolnash {

// Thrown when an input file or flag does not parse. `line` is 1-based, 0 if unknown.
struct parse_error : std::runtime_error {
    int line;
    explicit parse_error(const std::string& msg, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

// Thrown when an exhaustive operation would exceed its evaluation budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated precondition or malformed domain object (width mismatch, invalid instance, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A fixed-width bit word. Bit i is the 2^i bit; text form is MSB-first.
struct Word {
    uint64_t bits = 0;
    int width = 0;

    Word() = default;
    Word(uint64_t b, int w) : bits(b), width(w) {}

    bool get(int i) const { return (bits >> i) & 1u; }
    Word with_flipped(int i) const { return Word(bits ^ (uint64_t(1) << i), width); }

    bool operator==(const Word& o) const { return bits == o.bits && width == o.width; }
    bool operator!=(const Word& o) const { return !(*this == o); }
    bool operator<(const Word& o) const { return bits < o.bits; }

    std::string str() const {
        std::string s(width, '0');
        for (int i = 0; i < width; ++i)
            if (get(i)) s[width - 1 - i] = '1';
        return s;
    }

    static Word parse(const std::string& s, int line = 0) {
        if (s.empty() || s.size() > 63) throw parse_error("bad bit word '" + s + "'", line);
        Word w(0, (int)s.size());
        for (size_t i = 0; i < s.size(); ++i) {
            char c = s[i];
            if (c != '0' && c != '1') throw parse_error("bad bit word '" + s + "'", line);
            if (c == '1') w.bits |= uint64_t(1) << (s.size() - 1 - i);
        }
        return w;
    }
};

// SplitMix64: tiny deterministic generator, stable across platforms.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform in [0,1), 53-bit resolution.
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }
    // Uniform integer in [0, n).
    uint64_t next_below(uint64_t n) { return next() % n; }
};

// Derives an independent stream keyed by (seed, key); partition-invariant.
inline SplitMix64 keyed_stream(uint64_t seed, uint64_t key) {
    SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ull * (key + 1)));
    mix.next();
    return mix;
}

// Shortest decimal that round-trips a double (17 significant digits).
std::string fmt_g17(double v);

// Parses a decimal or a fraction "a/b".
double parse_number(const std::string& s, int line = 0);

// Splits a line on single spaces, ignoring empty tokens.
std::vector<std::string> split_ws(const std::string& line);

// Line reader that skips '#' comments and tracks line numbers.
struct LineReader {
    std::vector<std::string> lines;
    size_t pos = 0;
    int last_line = 0;

    explicit LineReader(const std::string& text);
    // Next non-comment line, or nullptr at end.
    const std::string* next();
    const std::string* peek();
    void expect(const std::string& want);
};

} // namespace eolnash
