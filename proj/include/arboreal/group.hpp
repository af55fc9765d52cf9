#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace arboreal {

// Dimension d and cyclic order k of the group G_{d,k}, the free product of d+1 copies of C_k.
struct Params {
    int d = 1;
    int k = 2;

    int colors() const { return d + 1; }
    bool operator==(const Params&) const = default;
};

// Throws DomainError unless d >= 1 and k >= 2.
void validateParams(const Params& p);

// A set of colors in {0..d}, one bit per color.
using ColorMask = std::uint32_t;

inline ColorMask fullMask(int colors) { return (ColorMask(1) << colors) - 1; }
inline int maskSize(ColorMask m) { return __builtin_popcount(m); }
inline bool hasColor(ColorMask m, int c) { return (m >> c) & 1u; }
std::vector<int> maskColors(ColorMask m);
ColorMask maskOf(const std::vector<int>& colors);

// One generator power alpha_index^exp.
struct Letter {
    int index = 0;
    long long exp = 1;
    bool operator==(const Letter&) const = default;
};

// Letters are stored in written order. The rightmost letter acts first on a point.
struct Word {
    std::vector<Letter> letters;

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }
    bool operator==(const Word&) const = default;
    auto operator<=>(const Word& o) const
    {
        return std::lexicographical_compare_three_way(
            letters.begin(), letters.end(), o.letters.begin(), o.letters.end(),
            [](const Letter& a, const Letter& b) {
                if (a.index != b.index)
                    return a.index <=> b.index;
                return a.exp <=> b.exp;
            });
    }
};

Word letter(int index, long long exp = 1);

long long normalizeExp(long long e, int k);

// Unique reduced form: exponents in {1..k-1}, adjacent indices distinct.
Word reduce(const Word& w, const Params& p);
bool isReduced(const Word& w, const Params& p);
Word multiply(const Word& u, const Word& v, const Params& p);
Word inverse(const Word& w, const Params& p);

// Exponent sum of alpha_i modulo k.
int theta(const Word& w, int i, const Params& p);
int wordLength(const Word& w, const Params& p);

// All reduced words of length at most maxLen, shortest first.
std::vector<Word> enumerateReducedWords(const Params& p, int maxLen);

// Uniform random word of the given raw length (not necessarily reduced).
Word randomWord(const Params& p, int length, std::mt19937_64& rng, int maxAbsExp = 3);

// Text form: whitespace-separated `a<i>^<l>` tokens, `e` for the identity. On input `a<i>`
// abbreviates `a<i>^1`.
std::string formatWord(const Word& w);
Word parseWord(const std::string& text);

} // namespace arboreal
