#include "cutpoly/edgevector.hpp"

namespace cutpoly {

EdgeVector EdgeVector::from_ints(const std::vector<long long>& e) {
    EdgeVector x(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) x.entries[i] = e[i];
    return x;
}

bool EdgeVector::is_zero() const {
    for (const Int& v : entries)
        if (v != 0) return false;
    return true;
}

std::vector<int> EdgeVector::support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i] != 0) s.push_back(static_cast<int>(i));
    return s;
}

EdgeVector& EdgeVector::operator+=(const EdgeVector& o) {
    if (entries.size() != o.entries.size())
        throw InvalidInputError("edge vector length mismatch");
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
    return *this;
}

EdgeVector& EdgeVector::operator-=(const EdgeVector& o) {
    if (entries.size() != o.entries.size())
        throw InvalidInputError("edge vector length mismatch");
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] -= o.entries[i];
    return *this;
}

EdgeVector operator*(const Int& c, const EdgeVector& a) {
    EdgeVector r(a.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) r.entries[i] = c * a.entries[i];
    return r;
}

} // namespace cutpoly
