#pragma once

// Coordinate export of named objects for explicit or fixture configurations.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poncelet/suite.hpp"

namespace poncelet {

/// Textual coordinates, parsed per backend ("p/q", integers or decimals).
struct SceneInput {
  std::array<std::array<std::string, 2>, 3> vertices;
  std::optional<std::array<std::string, 2>> P;  // empty: P is the incenter
  std::string name;
};

/// FIX1, FIX2 or FIX3.
std::optional<SceneInput> fixture(std::string_view name);

/// Parses "x,y;x,y;x,y" and an optional "x,y". Throws kParse.
SceneInput parse_scene(std::string_view triangle, std::optional<std::string_view> point);

template <class S>
Config<S> to_config(const SceneInput& in);

/// Names accepted by construct_json, in canonical order.
std::span<const std::string_view> construct_symbols();

/// {"backend": ..., "symbols": {name: value}} for the requested names, in
/// request order. Points are [x, y]; circles {"center", "r2"}; the conic is
/// its six coefficients (a, b, c, d, e, f) of ax^2+bxy+cy^2+dx+ey+f scaled so
/// the first nonzero one is 1. Exact values are "p/q" strings.
/// An empty request lists every symbol whose preconditions hold; a named
/// symbol whose preconditions fail throws GeometryError.
std::string construct_json(const SceneInput& in, Backend backend, const std::vector<std::string>& objects);

}  // namespace poncelet
