#include "knotsim/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace knotsim {

BraidWord::BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
    if (n < 1) throw DomainError("BraidWord: strand count must be positive");
    for (size_t i = 0; i < letters.size(); ++i) {
        int k = std::abs(letters[i]);
        if (k < 1 || k > n - 1)
            throw DomainError("BraidWord: letter " + std::to_string(letters[i]) +
                              " out of range for " + std::to_string(n) + " strands");
    }
}

int BraidWord::exponent_sum() const {
    int s = 0;
    for (int l : letters) s += (l > 0) ? 1 : -1;
    return s;
}

std::vector<int> BraidWord::permutation() const {
    std::vector<int> pos(strands);
    std::iota(pos.begin(), pos.end(), 0);
    for (int l : letters) {
        int i = std::abs(l) - 1;
        std::swap(pos[i], pos[i + 1]);
    }
    // pos[p] = strand occupying position p at the bottom; invert to get
    // start -> end positions.
    std::vector<int> perm(strands);
    for (int p = 0; p < strands; ++p) perm[pos[p]] = p;
    return perm;
}

BraidWord operator*(const BraidWord& x, const BraidWord& y) {
    if (x.strands != y.strands) throw DomainError("braid product: strand count mismatch");
    BraidWord r = x;
    r.letters.insert(r.letters.end(), y.letters.begin(), y.letters.end());
    return r;
}

std::string BraidWord::format() const {
    std::ostringstream out;
    out << "n=" << strands;
    for (int l : letters) out << " " << l;
    return out.str();
}

BraidWord parse_braid(const std::string& text, int strands) {
    std::istringstream in(text);
    std::string tok;
    std::vector<int> letters;
    int n = strands;
    int position = 0;
    int max_abs = 0;
    while (in >> tok) {
        ++position;
        if (tok.rfind("n=", 0) == 0) {
            try {
                n = std::stoi(tok.substr(2));
            } catch (const std::exception&) {
                throw ParseError("bad strand count header '" + tok + "'", position);
            }
            if (n < 1) throw ParseError("strand count must be positive", position);
            continue;
        }
        int v;
        size_t consumed = 0;
        try {
            v = std::stoi(tok, &consumed);
        } catch (const std::exception&) {
            throw ParseError("token '" + tok + "' is not an integer", position);
        }
        if (consumed != tok.size())
            throw ParseError("token '" + tok + "' is not an integer", position);
        if (v == 0) throw ParseError("generator index 0 is not allowed", position);
        max_abs = std::max(max_abs, std::abs(v));
        letters.push_back(v);
    }
    if (n == 0) n = max_abs + 1;
    if (max_abs > n - 1)
        throw ParseError("generator index " + std::to_string(max_abs) + " out of range for " +
                         std::to_string(n) + " strands");
    return BraidWord(n, std::move(letters));
}

BraidWord move_insert_cancel(const BraidWord& b, int generator, int pos) {
    int k = std::abs(generator);
    if (k < 1 || k > b.strands - 1) throw DomainError("insert_cancel: generator out of range");
    if (pos < 0 || pos > static_cast<int>(b.letters.size()))
        throw DomainError("insert_cancel: position out of range");
    BraidWord r = b;
    r.letters.insert(r.letters.begin() + pos, {generator, -generator});
    return r;
}

BraidWord move_braid_relation(const BraidWord& b, int pos) {
    if (pos < 0 || pos + 2 >= static_cast<int>(b.letters.size()))
        throw DomainError("braid_relation: position out of range");
    int x = b.letters[pos], y = b.letters[pos + 1], z = b.letters[pos + 2];
    bool same_sign = (x > 0) == (y > 0) && (y > 0) == (z > 0);
    if (!same_sign || x != z || std::abs(std::abs(x) - std::abs(y)) != 1)
        throw DomainError("braid_relation: letters at position " + std::to_string(pos) +
                          " do not match the s_i s_j s_i pattern");
    BraidWord r = b;
    r.letters[pos] = y;
    r.letters[pos + 1] = x;
    r.letters[pos + 2] = y;
    return r;
}

BraidWord move_far_commute(const BraidWord& b, int pos) {
    if (pos < 0 || pos + 1 >= static_cast<int>(b.letters.size()))
        throw DomainError("far_commute: position out of range");
    if (std::abs(std::abs(b.letters[pos]) - std::abs(b.letters[pos + 1])) <= 1)
        throw DomainError("far_commute: generators at position " + std::to_string(pos) +
                          " are not far apart");
    BraidWord r = b;
    std::swap(r.letters[pos], r.letters[pos + 1]);
    return r;
}

BraidWord move_conjugate(const BraidWord& b, int generator) {
    int k = std::abs(generator);
    if (k < 1 || k > b.strands - 1) throw DomainError("conjugate: generator out of range");
    BraidWord r = b;
    r.letters.insert(r.letters.begin(), generator);
    r.letters.push_back(-generator);
    return r;
}

BraidWord move_stabilize(const BraidWord& b, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("stabilize: sign must be +1 or -1");
    BraidWord r;
    r.strands = b.strands + 1;
    r.letters = b.letters;
    r.letters.push_back(sign * b.strands);
    return r;
}

BraidWord random_equivalence_move(const BraidWord& b, std::mt19937_64& rng, int& curl_delta) {
    curl_delta = 0;
    for (int attempt = 0; attempt < 64; ++attempt) {
        int kind = static_cast<int>(rng() % 5);
        int len = static_cast<int>(b.letters.size());
        try {
            switch (kind) {
                case 0: {
                    if (b.strands < 2) break;
                    int g = 1 + static_cast<int>(rng() % (b.strands - 1));
                    if (rng() & 1) g = -g;
                    return move_insert_cancel(b, g, static_cast<int>(rng() % (len + 1)));
                }
                case 1: {
                    if (len < 3) break;
                    return move_braid_relation(b, static_cast<int>(rng() % (len - 2)));
                }
                case 2: {
                    if (len < 2) break;
                    return move_far_commute(b, static_cast<int>(rng() % (len - 1)));
                }
                case 3: {
                    if (b.strands < 2) break;
                    int g = 1 + static_cast<int>(rng() % (b.strands - 1));
                    if (rng() & 1) g = -g;
                    return move_conjugate(b, g);
                }
                case 4: {
                    if (b.strands >= 6) break;  // keep strand counts testable
                    int sign = (rng() & 1) ? 1 : -1;
                    curl_delta = sign;
                    return move_stabilize(b, sign);
                }
            }
        } catch (const DomainError&) {
            // move not applicable here; try another
        }
    }
    // fall back to a move that is always applicable
    int g = 1 + static_cast<int>(rng() % std::max(1, b.strands - 1));
    return move_insert_cancel(b, g, 0);
}

BraidWord random_braid(int strands, int length, std::mt19937_64& rng) {
    std::vector<int> letters(length);
    for (int& l : letters) {
        l = 1 + static_cast<int>(rng() % (strands - 1));
        if (rng() & 1) l = -l;
    }
    return BraidWord(strands, std::move(letters));
}

} // namespace knotsim
