#include "knotsim/chainrep.hpp"

#include <map>

namespace knotsim {

std::vector<std::vector<int>> chain_states(int n, int root, const FusionSystem& fs) {
    if (n < 2) throw DomainError("chain_states: need at least 2 strands");
    std::vector<std::vector<int>> out;
    std::vector<int> p{fs.color};
    // depth-first in ascending label order -> lexicographic enumeration
    std::function<void()> rec = [&]() {
        if (static_cast<int>(p.size()) == n - 1) {
            if (fs.admissible(p.back(), fs.color, root)) {
                p.push_back(root);
                out.push_back(p);
                p.pop_back();
            }
            return;
        }
        for (int next : fs.labels) {
            if (!fs.admissible(p.back(), fs.color, next)) continue;
            p.push_back(next);
            rec();
            p.pop_back();
        }
    };
    rec();
    return out;
}

const CMatrix& BraidRep::generator(int i) const {
    if (i < 1 || i > n_ - 1) throw DomainError("BraidRep: generator index out of range");
    return gens_[i - 1];
}

CMatrix BraidRep::word_image(const BraidWord& b) const {
    if (b.strands != n_) throw DomainError("BraidRep: strand count mismatch");
    CMatrix m = CMatrix::identity(dim_);
    for (int l : b.letters) {
        const CMatrix& g = gens_[std::abs(l) - 1];
        m = m * (l > 0 ? g : g.adjoint());
    }
    return m;
}

std::vector<Complex> BraidRep::apply_word(const BraidWord& b, int basis_index) const {
    if (b.strands != n_) throw DomainError("BraidRep: strand count mismatch");
    std::vector<Complex> v(dim_, Complex(0));
    v[basis_index] = 1.0;
    // rho(b) v with b read left to right as a product acting on the left:
    // rho(l1 l2 ... lk) = g1 g2 ... gk, so apply the letters right to left.
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
        const CMatrix& g = gens_[std::abs(*it) - 1];
        v = (*it > 0 ? g : g.adjoint()).apply(v);
    }
    return v;
}

BraidRep build_chain_rep(int n, int root, const FusionSystem& fs) {
    BraidRep rep;
    rep.n_ = n;
    rep.states_ = chain_states(n, root, fs);
    rep.dim_ = static_cast<int>(rep.states_.size());
    if (rep.dim_ == 0)
        throw DomainError("chain representation: empty process space (root " +
                          std::to_string(root) + " unreachable)");

    std::map<std::vector<int>, int> index;
    for (int s = 0; s < rep.dim_; ++s) index[rep.states_[s]] = s;

    rep.gens_.reserve(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        CMatrix g(rep.dim_, rep.dim_);
        if (i == 1) {
            // sigma_1 twists the first two strands, whose channel is p_2.
            for (int s = 0; s < rep.dim_; ++s) g.at(s, s) = fs.twist(rep.states_[s][1]);
        } else {
            // sigma_i changes only p_i; block F Lambda F^T over the channel
            // basis of the (p_{i-1}, color | color, p_{i+1}) square.
            for (int s = 0; s < rep.dim_; ++s) {
                const auto& p = rep.states_[s];
                int prev = p[i - 2], next = p[i], e = p[i - 1];
                for (int ep : fs.labels) {
                    if (!fs.admissible(prev, fs.color, ep)) continue;
                    if (!fs.admissible(ep, fs.color, next)) continue;
                    std::vector<int> q = p;
                    q[i - 1] = ep;
                    auto it = index.find(q);
                    if (it == index.end()) continue;
                    Complex entry = 0;
                    for (int c : fs.labels) {
                        if (!fs.admissible(fs.color, fs.color, c)) continue;
                        entry += fs.f_symbol(prev, fs.color, fs.color, next, e, c) *
                                 fs.twist(c) *
                                 fs.f_symbol(prev, fs.color, fs.color, next, ep, c);
                    }
                    g.at(it->second, s) = entry;
                }
            }
        }
        rep.gens_.push_back(std::move(g));
    }
    return rep;
}

} // namespace knotsim
