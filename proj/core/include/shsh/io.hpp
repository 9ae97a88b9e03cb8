#pragma once

#include "shsh/arcsystem.hpp"
#include "shsh/flatsurface.hpp"
#include "shsh/traintrack.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace shsh {

// JSON documents carrying `"format": 1` and a `kind` tag. Floating values
// are written with 12 significant digits; exact values as "p/q" strings.
inline constexpr int kFileFormat = 1;

std::string format_number(double x);
std::string format_number(const Rational& x);
Rational parse_rational(const std::string& text);
// "p/q", an integer, or a decimal converted exactly from its binary value.
Rational parse_exact(const std::string& text);

// The `kind` tag of a document: track, weights, surface or cut.
std::string file_kind(const std::string& text);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

std::string write_track(const TrainTrack& track);
TrainTrack read_track(const std::string& text);

// Weight values are numbers (real), "p/q" strings or numbers (rational) or
// [re, im] pairs (complex).
template <class T>
std::string write_weights(const WeightSystem<T>& w, bool arc_positive = false);

template <class T>
WeightSystem<T> read_weights(const std::string& text, const TrainTrack& track);

template <class R>
std::string write_surface(const FlatSurfaceT<R>& q);

// Periods outside [z]+ form are replaced by their negatives; one warning per
// such edge is appended to `warnings`.
template <class R>
FlatSurfaceT<R> read_surface(const std::string& text, std::vector<std::string>* warnings = nullptr,
                             double tol = kHorizontalTolerance);

template <class T>
std::string write_cut(const WeightedArcSystem<T>& a);

template <class T>
WeightedArcSystem<T> read_cut(const std::string& text);

}  // namespace shsh
