#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <type_traits>

namespace shsh {

using Rational = boost::rational<std::int64_t>;
using Complex = std::complex<double>;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static double magnitude(double x) { return std::abs(x); }
    static double to_double(double x) { return x; }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    static double magnitude(const Complex& x) { return std::abs(x); }
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static double magnitude(const Rational& x) { return std::abs(boost::rational_cast<double>(x)); }
    static double to_double(const Rational& x) { return boost::rational_cast<double>(x); }
};

template <>
struct ScalarTraits<std::int64_t> {
    static constexpr bool exact = true;
    static double magnitude(std::int64_t x) { return std::abs(static_cast<double>(x)); }
    static double to_double(std::int64_t x) { return static_cast<double>(x); }
};

// Zero test: exact scalars compare with zero, floating ones against tol.
template <class T>
bool is_zero(const T& x, double tol) {
    if constexpr (ScalarTraits<T>::exact) {
        return x == T(0);
    } else {
        return ScalarTraits<T>::magnitude(x) <= tol;
    }
}

template <class T>
double to_double(const T& x) {
    return ScalarTraits<T>::to_double(x);
}

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace shsh
