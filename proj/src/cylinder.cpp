#include "minq/cylinder.hpp"

#include <stdexcept>

namespace minq {

std::pair<Cylinder, Cylinder> Cylinder::split() const {
    Rational m = mediant();
    return {Cylinder{left, m, depth + 1}, Cylinder{m, right, depth + 1}};
}

BigInt Cylinder::unimodularity_defect() const {
    BigInt cross = right.num() * left.den() - left.num() * right.den();
    return cross.is_negative() ? -cross : cross;
}

std::vector<Cylinder> root_partition(int k) {
    if (k < 0 || k > 4096) throw std::domain_error("root_partition: depth out of range");
    if (k > 24) throw std::length_error("root_partition: 2^k cylinders exceed memory budget");
    std::vector<Cylinder> cur{Cylinder::root()};
    for (int level = 0; level < k; ++level) {
        std::vector<Cylinder> next;
        next.reserve(cur.size() * 2);
        for (const auto& c : cur) {
            auto [a, b] = c.split();
            next.push_back(std::move(a));
            next.push_back(std::move(b));
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace minq
