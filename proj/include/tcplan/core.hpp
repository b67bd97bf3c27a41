#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <tcplan/errors.hpp>

namespace tcplan {

/// A point of Euclidean d-space. Always has dim() >= 1 and finite coordinates;
/// any construction or arithmetic that would violate this throws InvalidArgument.
class Vector {
  public:
    explicit Vector(std::vector<double> coords);
    Vector(std::initializer_list<double> coords);

    static Vector zeros(std::size_t dim);
    /// i-th standard basis vector of R^dim (0-based index).
    static Vector basis(std::size_t dim, std::size_t index);

    [[nodiscard]] std::size_t dim() const noexcept { return coords_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return coords_[i]; }
    [[nodiscard]] std::span<const double> coords() const noexcept { return coords_; }

    [[nodiscard]] double dot(const Vector& other) const;
    [[nodiscard]] double norm() const noexcept;

    friend Vector operator+(const Vector& a, const Vector& b);
    friend Vector operator-(const Vector& a, const Vector& b);
    friend Vector operator-(const Vector& a);
    friend Vector operator*(double s, const Vector& v);
    friend Vector operator*(const Vector& v, double s) { return s * v; }
    friend Vector operator/(const Vector& v, double s);

    // Exact coordinate-wise equality; use distance() for tolerant comparison.
    friend bool operator==(const Vector& a, const Vector& b) = default;

    [[nodiscard]] std::string to_string() const;

  private:
    void validate() const;

    std::vector<double> coords_;
};

[[nodiscard]] double distance(const Vector& a, const Vector& b);

/// (1 - t) a + t b
[[nodiscard]] Vector lerp(const Vector& a, const Vector& b, double t);

/// Numerical tolerances shared by every planner and check.
/// eps_predicate guards open-set predicates and normalisation; eps_assert is
/// the accuracy every exact formula is held to.
struct ToleranceConfig {
    double eps_predicate = 1e-6;
    double eps_assert = 1e-9;
    std::size_t sample_count = 256;

    /// Throws InvalidArgument unless 0 < eps_assert < eps_predicate < 1 and sample_count >= 2.
    void validate() const;
};

/// v / |v|. Throws NearZeroVector when |v| <= tol.eps_predicate.
[[nodiscard]] Vector normalize(const Vector& v, const ToleranceConfig& tol = {});

/// The nowhere-vanishing tangent field (x1, y1, ..., xm, ym) -> (-y1, x1, ..., -ym, xm).
/// Throws OddDimension for odd dim(v).
[[nodiscard]] Vector tangent_field_nu(const Vector& v);

/// A parametric curve [0, 1] -> R^dim, evaluated in closed form.
///
/// Paths are immutable and cheap to copy (the evaluator is shared). The
/// breakpoint list records the parameters in (0, 1) where the defining formula
/// switches; for concatenations these are exactly the schedule points where a
/// continuity defect could hide.
class Path {
  public:
    using Evaluator = std::function<Vector(double)>;

    /// Throws InvalidArgument if dim == 0, the evaluator is empty, or a
    /// breakpoint lies outside (0, 1). Breakpoints are sorted.
    Path(std::size_t dim, Evaluator eval, std::vector<double> breakpoints = {});

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }

    /// Evaluates at t in [0, 1]; throws InvalidArgument outside that range
    /// and DimensionMismatch if the evaluator misbehaves.
    [[nodiscard]] Vector operator()(double t) const;

    [[nodiscard]] Vector start() const { return (*this)(0.0); }
    [[nodiscard]] Vector end() const { return (*this)(1.0); }

  private:
    std::size_t dim_;
    std::shared_ptr<const Evaluator> eval_;
    std::vector<double> breakpoints_;
};

[[nodiscard]] Path constant_path(const Vector& point);
[[nodiscard]] Path segment_path(const Vector& from, const Vector& to);

/// t -> map(path(t)). Breakpoints are preserved.
[[nodiscard]] Path map_path(const Path& path, std::function<Vector(const Vector&)> map, std::size_t out_dim);

/// p then q on [0, 1/2] and [1/2, 1].
/// Throws DimensionMismatch, or JunctionGap if |p(1) - q(0)| > tol.eps_assert.
[[nodiscard]] Path concat2(const Path& p, const Path& q, const ToleranceConfig& tol = {});

/// p, q, r on [0, 1/3], [1/3, 2/3], [2/3, 1]. Same errors as concat2.
[[nodiscard]] Path concat3(const Path& p, const Path& q, const Path& r, const ToleranceConfig& tol = {});

/// [p(0), p(1/(n-1)), ..., p(1)]. Throws InvalidArgument for n < 2.
[[nodiscard]] std::vector<Vector> sample_path(const Path& p, std::size_t n);

/// Sum of chord lengths over sample_path(p, n).
[[nodiscard]] double polyline_length(const Path& p, std::size_t n);

/// max_i |p(t_i) - q(t_i)| over n uniform samples, n >= 2.
[[nodiscard]] double sup_distance(const Path& p, const Path& q, std::size_t n);

}  // namespace tcplan
