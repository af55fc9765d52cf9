#include "arboreal/group.hpp"
#include "arboreal/error.hpp"
#include "arboreal/rng.hpp"

#include <sstream>

namespace arboreal {

void validateParams(const Params& p)
{
    if (p.d < 1)
        throw DomainError("dimension d must be at least 1, got " + std::to_string(p.d));
    if (p.k < 2)
        throw DomainError("order k must be at least 2, got " + std::to_string(p.k));
    if (p.d > 20)
        throw DomainError("dimension d above 20 is not supported");
}

std::vector<int> maskColors(ColorMask m)
{
    std::vector<int> out;
    for (int c = 0; m; ++c, m >>= 1)
        if (m & 1u)
            out.push_back(c);
    return out;
}

ColorMask maskOf(const std::vector<int>& colors)
{
    ColorMask m = 0;
    for (int c : colors)
        m |= ColorMask(1) << c;
    return m;
}

Word letter(int index, long long exp)
{
    Word w;
    w.letters.push_back({index, exp});
    return w;
}

long long normalizeExp(long long e, int k)
{
    long long r = e % k;
    return r < 0 ? r + k : r;
}

Word reduce(const Word& w, const Params& p)
{
    Word out;
    auto& st = out.letters;
    for (const Letter& l : w.letters) {
        if (l.index < 0 || l.index > p.d)
            throw DomainError("generator index " + std::to_string(l.index) + " outside {0.." +
                              std::to_string(p.d) + "}");
        long long e = normalizeExp(l.exp, p.k);
        if (e == 0)
            continue;
        if (!st.empty() && st.back().index == l.index) {
            long long merged = normalizeExp(st.back().exp + e, p.k);
            if (merged == 0)
                st.pop_back();
            else
                st.back().exp = merged;
        } else {
            st.push_back({l.index, e});
        }
    }
    return out;
}

bool isReduced(const Word& w, const Params& p)
{
    for (std::size_t t = 0; t < w.letters.size(); ++t) {
        const Letter& l = w.letters[t];
        if (l.index < 0 || l.index > p.d || l.exp < 1 || l.exp >= p.k)
            return false;
        if (t > 0 && w.letters[t - 1].index == l.index)
            return false;
    }
    return true;
}

Word multiply(const Word& u, const Word& v, const Params& p)
{
    Word cat = u;
    cat.letters.insert(cat.letters.end(), v.letters.begin(), v.letters.end());
    return reduce(cat, p);
}

Word inverse(const Word& w, const Params& p)
{
    Word inv;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        inv.letters.push_back({it->index, -it->exp});
    return reduce(inv, p);
}

int theta(const Word& w, int i, const Params& p)
{
    long long s = 0;
    for (const Letter& l : w.letters)
        if (l.index == i)
            s = normalizeExp(s + normalizeExp(l.exp, p.k), p.k);
    return static_cast<int>(s);
}

int wordLength(const Word& w, const Params& p) { return static_cast<int>(reduce(w, p).size()); }

std::vector<Word> enumerateReducedWords(const Params& p, int maxLen)
{
    std::vector<Word> all{Word{}};
    std::size_t layerBegin = 0;
    for (int len = 1; len <= maxLen; ++len) {
        std::size_t layerEnd = all.size();
        for (std::size_t t = layerBegin; t < layerEnd; ++t) {
            for (int i = 0; i <= p.d; ++i) {
                if (!all[t].empty() && all[t].letters.front().index == i)
                    continue;
                for (int e = 1; e < p.k; ++e) {
                    Word w;
                    w.letters.reserve(all[t].size() + 1);
                    w.letters.push_back({i, e});
                    w.letters.insert(w.letters.end(), all[t].letters.begin(), all[t].letters.end());
                    all.push_back(std::move(w));
                }
            }
        }
        layerBegin = layerEnd;
    }
    return all;
}

Word randomWord(const Params& p, int length, std::mt19937_64& rng, int maxAbsExp)
{
    Word w;
    for (int t = 0; t < length; ++t) {
        int i = static_cast<int>(uniformBelow(rng, p.d + 1));
        long long e = static_cast<long long>(uniformBelow(rng, 2 * maxAbsExp + 1)) - maxAbsExp;
        w.letters.push_back({i, e});
    }
    return w;
}

std::string formatWord(const Word& w)
{
    if (w.empty())
        return "e";
    std::ostringstream os;
    for (std::size_t t = 0; t < w.letters.size(); ++t) {
        if (t)
            os << ' ';
        os << 'a' << w.letters[t].index << '^' << w.letters[t].exp;
    }
    return os.str();
}

Word parseWord(const std::string& text)
{
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "e")
            continue;
        if (tok.size() < 2 || tok[0] != 'a')
            throw ParseError("bad word token '" + tok + "'");
        std::size_t caret = tok.find('^');
        try {
            std::size_t used = 0;
            std::string idx = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
            int i = std::stoi(idx, &used);
            if (used != idx.size() || i < 0)
                throw ParseError("bad generator index in '" + tok + "'");
            long long e = 1;
            if (caret != std::string::npos) {
                std::string ex = tok.substr(caret + 1);
                e = std::stoll(ex, &used);
                if (used != ex.size())
                    throw ParseError("bad exponent in '" + tok + "'");
            }
            w.letters.push_back({i, e});
        } catch (const std::logic_error&) {
            throw ParseError("bad word token '" + tok + "'");
        }
    }
    return w;
}

} // namespace arboreal
