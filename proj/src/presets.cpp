#include "greenseq/presets.hpp"

#include <cstdio>

#include "greenseq/errors.hpp"

namespace greenseq {

namespace {

QuiverFile from_arrows(int n, const std::vector<std::pair<int, int>>& arrows) {
    QuiverSpec q;
    q.n = n;
    q.d.assign(n, 1);
    q.b0 = Mat(n, n);
    for (auto [from, to] : arrows) {
        q.b0(to - 1, from - 1) += 1;
        q.b0(from - 1, to - 1) -= 1;
    }
    validate_quiver(q);
    return QuiverFile{q, std::nullopt};
}

QuiverFile rank2(std::vector<i64> d, Mat b0) {
    QuiverSpec q;
    q.n = 2;
    q.d = std::move(d);
    q.b0 = std::move(b0);
    validate_quiver(q);
    return QuiverFile{q, std::nullopt};
}

}  // namespace

QuiverFile preset(const std::string& name) {
    int a = 0, b = 0;
    if (std::sscanf(name.c_str(), "A(%d)%n", &a, &b) == 1 &&
        b == static_cast<int>(name.size()) && name.back() == ')') {
        if (a < 1) throw InvalidInput("A(n) needs n >= 1");
        std::vector<std::pair<int, int>> arrows;
        for (int i = 1; i < a; ++i) arrows.emplace_back(i, i + 1);
        return from_arrows(a, arrows);
    }
    int p = 0, q = 0;
    if (std::sscanf(name.c_str(), "Atilde(%d,%d)%n", &p, &q, &b) == 2 &&
        b == static_cast<int>(name.size()) && name.back() == ')') {
        if (p < 1 || q < 1) throw InvalidInput("Atilde(p,q) needs p,q >= 1");
        int m = p + q;
        std::vector<std::pair<int, int>> arrows;
        for (int i = 1; i <= m; ++i) {
            int u = i, v = i == m ? 1 : i + 1;
            if (i <= p)
                arrows.emplace_back(u, v); /* clockwise */
            else
                arrows.emplace_back(v, u); /* against */
        }
        return from_arrows(m, arrows);
    }
    if (name == "C2-paper") return rank2({2, 1}, Mat::from_rows({{0, -1}, {2, 0}}));
    if (name == "B2") return rank2({1, 2}, Mat::from_rows({{0, -2}, {1, 0}}));
    if (name == "G2") return rank2({3, 1}, Mat::from_rows({{0, -1}, {3, 0}}));
    if (name == "kronecker") return rank2({1, 1}, Mat::from_rows({{0, 2}, {-2, 0}}));
    throw InvalidInput("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
    return {"A(n)", "C2-paper", "B2", "G2", "kronecker", "Atilde(p,q)"};
}

}  // namespace greenseq
