#ifndef MMV_FWORD_HPP
#define MMV_FWORD_HPP

#include <map>
#include <string>
#include <vector>

#include "mmv/rational.hpp"

namespace mmv {

// Word in the non-commuting letters f_3, f_5, ... times a commuting power
// of f_2. Weight = sum of letters + 2 * f2_power; coradical degree = number
// of odd letters.
struct FWord {
    std::vector<int> odd_letters; // each >= 3 and odd
    int f2_power = 0;

    long weight() const;
    int coradical_degree() const { return static_cast<int>(odd_letters.size()); }
    void validate() const;
    std::string str() const;
    bool operator<(const FWord& o) const;
    bool operator==(const FWord& o) const {
        return odd_letters == o.odd_letters && f2_power == o.f2_power;
    }
};

// Integer-coefficient formal sum of f-words.
using FWordSum = std::map<FWord, BigInt>;

// Riffle shuffle of the odd-letter words; f_2 powers multiply commutatively.
FWordSum shuffle_product(const FWord& u, const FWord& v);

std::string to_string(const FWordSum& s);

} // namespace mmv

#endif
