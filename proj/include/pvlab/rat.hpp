#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace pvlab {

using Int = mpz_class;

// Exact rational scalar. Values are always kept in canonical form:
// lowest terms, denominator > 0. All arithmetic is exact; there is no
// floating-point path through this type.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(n) {}
    Rat(const Int& n) : q_(n) {}

    Rat(long num, long den) : q_(num, den) { normalize(); }
    Rat(const Int& num, const Int& den) : q_(num, den) { normalize(); }

    // Accepts "num/den" or a bare integer, nothing else (no decimals).
    static Rat parse(const std::string& text);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    // Serialized form is always "num/den", integers included ("7/1").
    std::string str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

    double to_double() const { return q_.get_d(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // Largest integer <= value.
    Int floor() const {
        Int r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
        return r;
    }

    Rat abs() const { return sign() < 0 ? Rat(mpq_class(-q_)) : *this; }

    Rat reciprocal() const {
        if (is_zero()) throw std::domain_error("Rat: reciprocal of zero");
        return Rat(mpq_class(1) / q_);
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(a.q_ / b.q_));
    }
    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}
    void normalize() {
        if (q_.get_den() == 0) throw std::domain_error("Rat: zero denominator");
        q_.canonicalize();
    }
    mpq_class q_;
};

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

// Errors carry a short machine-readable kind next to the human message so
// suite runners can map them onto report statuses.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct TooLargeError : Error {
    explicit TooLargeError(const std::string& m) : Error("TooLarge", m) {}
};
struct ResourceGuardError : Error {
    explicit ResourceGuardError(const std::string& m) : Error("ResourceGuard", m) {}
};
struct OutOfRegimeError : Error {
    explicit OutOfRegimeError(const std::string& m) : Error("OutOfRegime", m) {}
};
struct NotContractingError : Error {
    explicit NotContractingError(const std::string& m) : Error("NotContracting", m) {}
};
struct DegenerateDenominatorError : Error {
    explicit DegenerateDenominatorError(const std::string& m) : Error("DegenerateDenominator", m) {}
};
struct DegenerateError : Error {
    explicit DegenerateError(const std::string& m) : Error("Degenerate", m) {}
};

}  // namespace pvlab
