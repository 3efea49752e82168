#pragma once

#include <string>

#include "json.hpp"

#include "janowski/moebius_geometry.hpp"
#include "janowski/power_envelope.hpp"
#include "janowski/types.hpp"

namespace janowski::cli {

using nlohmann::json;

json number(double value);
json to_json(Complex z);
json to_json(const Interval& interval);
json to_json(const DiskGeometry& g);
json to_json(const CriticalPoints& c);
json to_json(const BoundReport& report);

std::string curve_csv(const EnvelopeCurve& curve);

// Boundary of the powered map at radius r with axes, w = 0 and w = 1 marked.
std::string domain_svg(const JanowskiParams& p, double r, std::size_t samples);

}  // namespace janowski::cli
