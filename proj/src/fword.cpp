#include "mmv/fword.hpp"

#include <sstream>

#include "mmv/errors.hpp"

namespace mmv {

long FWord::weight() const {
    long w = 2L * f2_power;
    for (int l : odd_letters) w += l;
    return w;
}

void FWord::validate() const {
    if (f2_power < 0) throw domain_error("FWord: negative f_2 power");
    for (int l : odd_letters)
        if (l < 3 || l % 2 == 0) throw domain_error("FWord: letters must be odd and >= 3");
}

std::string FWord::str() const {
    std::ostringstream os;
    if (odd_letters.empty() && f2_power == 0) return "1";
    for (size_t i = 0; i < odd_letters.size(); ++i) {
        if (i) os << " ";
        os << "f" << odd_letters[i];
    }
    if (f2_power > 0) {
        if (!odd_letters.empty()) os << " ";
        os << "f2";
        if (f2_power > 1) os << "^" << f2_power;
    }
    return os.str();
}

bool FWord::operator<(const FWord& o) const {
    if (f2_power != o.f2_power) return f2_power < o.f2_power;
    return odd_letters < o.odd_letters;
}

namespace {

void shuffle_rec(const std::vector<int>& u, size_t iu, const std::vector<int>& v, size_t iv,
                 std::vector<int>& acc, FWordSum& out, int f2) {
    if (iu == u.size() && iv == v.size()) {
        FWord w{acc, f2};
        out[w] += BigInt(1);
        return;
    }
    if (iu < u.size()) {
        acc.push_back(u[iu]);
        shuffle_rec(u, iu + 1, v, iv, acc, out, f2);
        acc.pop_back();
    }
    if (iv < v.size()) {
        acc.push_back(v[iv]);
        shuffle_rec(u, iu, v, iv + 1, acc, out, f2);
        acc.pop_back();
    }
}

} // namespace

FWordSum shuffle_product(const FWord& u, const FWord& v) {
    u.validate();
    v.validate();
    FWordSum out;
    std::vector<int> acc;
    shuffle_rec(u.odd_letters, 0, v.odd_letters, 0, acc, out, u.f2_power + v.f2_power);
    return out;
}

std::string to_string(const FWordSum& s) {
    if (s.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : s) {
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        if (!(c == BigInt(1))) os << c.str() << " ";
        os << w.str();
        first = false;
    }
    return os.str();
}

} // namespace mmv
