#include <tcplan/core.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace tcplan {

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) { validate(); }

Vector::Vector(std::initializer_list<double> coords) : coords_(coords) { validate(); }

Vector Vector::zeros(std::size_t dim) { return Vector(std::vector<double>(dim, 0.0)); }

Vector Vector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw InvalidArgument("basis index " + std::to_string(index) + " out of range for dimension " +
                              std::to_string(dim));
    }
    std::vector<double> c(dim, 0.0);
    c[index] = 1.0;
    return Vector(std::move(c));
}

void Vector::validate() const {
    if (coords_.empty()) {
        throw InvalidArgument("vector dimension must be at least 1");
    }
    for (double c : coords_) {
        if (!std::isfinite(c)) {
            throw InvalidArgument("vector coordinates must be finite");
        }
    }
}

namespace {

void require_same_dim(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
}

}  // namespace

double Vector::dot(const Vector& other) const {
    require_same_dim(*this, other);
    double s = 0.0;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        s += coords_[i] * other.coords_[i];
    }
    return s;
}

double Vector::norm() const noexcept {
    double s = 0.0;
    for (double c : coords_) {
        s += c * c;
    }
    return std::sqrt(s);
}

Vector operator+(const Vector& a, const Vector& b) {
    require_same_dim(a, b);
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coords_[i] + b.coords_[i];
    }
    return Vector(std::move(c));
}

Vector operator-(const Vector& a, const Vector& b) {
    require_same_dim(a, b);
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coords_[i] - b.coords_[i];
    }
    return Vector(std::move(c));
}

Vector operator-(const Vector& a) { return -1.0 * a; }

Vector operator*(double s, const Vector& v) {
    std::vector<double> c(v.coords_);
    for (double& x : c) {
        x *= s;
    }
    return Vector(std::move(c));
}

Vector operator/(const Vector& v, double s) {
    std::vector<double> c(v.coords_);
    for (double& x : c) {
        x /= s;
    }
    return Vector(std::move(c));
}

std::string Vector::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0) {
            os << ", ";
        }
        os << coords_[i];
    }
    os << ')';
    return os.str();
}

double distance(const Vector& a, const Vector& b) { return (a - b).norm(); }

Vector lerp(const Vector& a, const Vector& b, double t) {
    require_same_dim(a, b);
    std::vector<double> c(a.dim());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = (1.0 - t) * a[i] + t * b[i];
    }
    return Vector(std::move(c));
}

void ToleranceConfig::validate() const {
    if (!(0.0 < eps_assert && eps_assert < eps_predicate && eps_predicate < 1.0)) {
        throw InvalidArgument("tolerances must satisfy 0 < eps_assert < eps_predicate < 1");
    }
    if (sample_count < 2) {
        throw InvalidArgument("sample_count must be at least 2");
    }
}

Vector normalize(const Vector& v, const ToleranceConfig& tol) {
    const double n = v.norm();
    if (n <= tol.eps_predicate) {
        throw NearZeroVector("cannot normalize " + v.to_string());
    }
    return v / n;
}

Vector tangent_field_nu(const Vector& v) {
    if (v.dim() % 2 != 0) {
        throw OddDimension("tangent field needs even dimension, got " + std::to_string(v.dim()));
    }
    std::vector<double> c(v.dim());
    for (std::size_t i = 0; i < v.dim(); i += 2) {
        c[i] = -v[i + 1];
        c[i + 1] = v[i];
    }
    return Vector(std::move(c));
}

// ---------------------------------------------------------------------------
// Path

Path::Path(std::size_t dim, Evaluator eval, std::vector<double> breakpoints)
    : dim_(dim), breakpoints_(std::move(breakpoints)) {
    if (dim == 0) {
        throw InvalidArgument("path dimension must be at least 1");
    }
    if (!eval) {
        throw InvalidArgument("path evaluator is empty");
    }
    for (double b : breakpoints_) {
        if (!(b > 0.0 && b < 1.0)) {
            throw InvalidArgument("breakpoints must lie in (0, 1)");
        }
    }
    std::sort(breakpoints_.begin(), breakpoints_.end());
    eval_ = std::make_shared<const Evaluator>(std::move(eval));
}

Vector Path::operator()(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw InvalidArgument("path parameter must lie in [0, 1]");
    }
    Vector v = (*eval_)(t);
    if (v.dim() != dim_) {
        throw DimensionMismatch("path evaluator returned dimension " + std::to_string(v.dim()) + ", expected " +
                                std::to_string(dim_));
    }
    return v;
}

Path constant_path(const Vector& point) {
    return Path(point.dim(), [point](double) { return point; });
}

Path segment_path(const Vector& from, const Vector& to) {
    require_same_dim(from, to);
    return Path(from.dim(), [from, to](double t) { return lerp(from, to, t); });
}

Path map_path(const Path& path, std::function<Vector(const Vector&)> map, std::size_t out_dim) {
    return Path(
        out_dim, [path, map = std::move(map)](double t) { return map(path(t)); }, path.breakpoints());
}

namespace {

// Inner parameters are clamped so rounding in k*t - j never leaves [0, 1].
double clamp_unit(double s) { return std::clamp(s, 0.0, 1.0); }

void require_junction(const Path& left, const Path& right, const ToleranceConfig& tol) {
    if (left.dim() != right.dim()) {
        throw DimensionMismatch("cannot concatenate paths of dimension " + std::to_string(left.dim()) + " and " +
                                std::to_string(right.dim()));
    }
    const Vector l = left.end();
    const Vector r = right.start();
    const double gap = distance(l, r);
    if (gap > tol.eps_assert) {
        throw JunctionGap(l.to_string() + " vs " + r.to_string());
    }
}

void append_scaled(std::vector<double>& out, const std::vector<double>& in, double offset, double scale) {
    for (double b : in) {
        out.push_back(offset + scale * b);
    }
}

}  // namespace

Path concat2(const Path& p, const Path& q, const ToleranceConfig& tol) {
    require_junction(p, q, tol);
    std::vector<double> bps;
    append_scaled(bps, p.breakpoints(), 0.0, 0.5);
    bps.push_back(0.5);
    append_scaled(bps, q.breakpoints(), 0.5, 0.5);
    return Path(
        p.dim(),
        [p, q](double t) {
            if (t <= 0.5) {
                return p(clamp_unit(2.0 * t));
            }
            return q(clamp_unit(2.0 * t - 1.0));
        },
        std::move(bps));
}

Path concat3(const Path& p, const Path& q, const Path& r, const ToleranceConfig& tol) {
    require_junction(p, q, tol);
    require_junction(q, r, tol);
    constexpr double third = 1.0 / 3.0;
    constexpr double two_thirds = 2.0 / 3.0;
    std::vector<double> bps;
    append_scaled(bps, p.breakpoints(), 0.0, third);
    bps.push_back(third);
    append_scaled(bps, q.breakpoints(), third, third);
    bps.push_back(two_thirds);
    append_scaled(bps, r.breakpoints(), two_thirds, third);
    return Path(
        p.dim(),
        [p, q, r](double t) {
            if (t <= third) {
                return p(clamp_unit(3.0 * t));
            }
            if (t <= two_thirds) {
                return q(clamp_unit(3.0 * t - 1.0));
            }
            return r(clamp_unit(3.0 * t - 2.0));
        },
        std::move(bps));
}

std::vector<Vector> sample_path(const Path& p, std::size_t n) {
    if (n < 2) {
        throw InvalidArgument("sample_path needs n >= 2");
    }
    std::vector<Vector> out;
    out.reserve(n);
    const double denom = static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(p(static_cast<double>(i) / denom));
    }
    return out;
}

double polyline_length(const Path& p, std::size_t n) {
    const std::vector<Vector> pts = sample_path(p, n);
    double len = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        len += distance(pts[i - 1], pts[i]);
    }
    return len;
}

double sup_distance(const Path& p, const Path& q, std::size_t n) {
    if (n < 2) {
        throw InvalidArgument("sup_distance needs n >= 2");
    }
    double worst = 0.0;
    const double denom = static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / denom;
        worst = std::max(worst, distance(p(t), q(t)));
    }
    return worst;
}

}  // namespace tcplan
