#pragma once

#include <numbers>

namespace swathplan {

inline constexpr double kMetersPerNauticalMile = 1852.0;

constexpr double nm_to_m(double nautical_miles) { return nautical_miles * kMetersPerNauticalMile; }
constexpr double m_to_nm(double meters) { return meters / kMetersPerNauticalMile; }

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Plane angle. Stored in degrees since every public interface speaks degrees.
class Angle {
public:
    constexpr Angle() = default;

    static constexpr Angle degrees(double deg) { return Angle(deg); }
    static constexpr Angle radians(double rad) { return Angle(rad_to_deg(rad)); }

    constexpr double deg() const { return deg_; }
    constexpr double rad() const { return deg_to_rad(deg_); }

    constexpr auto operator<=>(const Angle&) const = default;

private:
    constexpr explicit Angle(double deg) : deg_(deg) {}
    double deg_ = 0.0;
};

}  // namespace swathplan
