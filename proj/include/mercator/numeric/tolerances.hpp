#pragma once

namespace mercator::numeric {

// Double-precision contract tolerances, kept in one place.
inline constexpr double kCoreTolerance = 1e-12;       // formula / route agreement
inline constexpr double kRoundTripTolerance = 1e-10;  // inverse round trips, complex path
inline constexpr double kClosestApproachTolerance = 1e-13;
inline constexpr double kSeriesConsistencyTolerance = 5e-12;

}  // namespace mercator::numeric
