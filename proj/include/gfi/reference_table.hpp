#pragma once

#include <array>
#include <optional>

#include "gfi/method.hpp"

namespace gfi::sim {

/// One reference cell: empirical coverage and expected length of the 95%
/// interval for a (method, n, theta) combination.
struct ReferenceCell {
    Method method;
    int n;
    double theta;
    double coverage;
    double length;
};

/// Embedded reference results for the triangular coverage study:
/// 4 methods x 10 sample sizes x 8 parameter values.
inline constexpr std::array<ReferenceCell, 320> kReferenceTable{{
    {Method::GF, 1, 0.01, 0.298, 0.781},
    {Method::GF, 1, 0.03, 0.603, 0.793},
    {Method::GF, 1, 0.05, 0.753, 0.802},
    {Method::GF, 1, 0.10, 0.895, 0.82},
    {Method::GF, 1, 0.20, 0.966, 0.841},
    {Method::GF, 1, 0.30, 0.983, 0.852},
    {Method::GF, 1, 0.40, 0.99, 0.858},
    {Method::GF, 1, 0.50, 0.992, 0.86},
    {Method::GF, 2, 0.01, 0.389, 0.75},
    {Method::GF, 2, 0.03, 0.71, 0.758},
    {Method::GF, 2, 0.05, 0.826, 0.766},
    {Method::GF, 2, 0.10, 0.925, 0.783},
    {Method::GF, 2, 0.20, 0.973, 0.81},
    {Method::GF, 2, 0.30, 0.989, 0.828},
    {Method::GF, 2, 0.40, 0.992, 0.839},
    {Method::GF, 2, 0.50, 0.992, 0.843},
    {Method::GF, 5, 0.01, 0.557, 0.589},
    {Method::GF, 5, 0.03, 0.802, 0.605},
    {Method::GF, 5, 0.05, 0.875, 0.619},
    {Method::GF, 5, 0.10, 0.936, 0.65},
    {Method::GF, 5, 0.20, 0.97, 0.698},
    {Method::GF, 5, 0.30, 0.98, 0.731},
    {Method::GF, 5, 0.40, 0.984, 0.75},
    {Method::GF, 5, 0.50, 0.986, 0.757},
    {Method::GF, 10, 0.01, 0.689, 0.394},
    {Method::GF, 10, 0.03, 0.864, 0.417},
    {Method::GF, 10, 0.05, 0.908, 0.438},
    {Method::GF, 10, 0.10, 0.946, 0.483},
    {Method::GF, 10, 0.20, 0.963, 0.553},
    {Method::GF, 10, 0.30, 0.969, 0.6},
    {Method::GF, 10, 0.40, 0.969, 0.628},
    {Method::GF, 10, 0.50, 0.969, 0.636},
    {Method::GF, 20, 0.01, 0.808, 0.229},
    {Method::GF, 20, 0.03, 0.911, 0.256},
    {Method::GF, 20, 0.05, 0.935, 0.28},
    {Method::GF, 20, 0.10, 0.955, 0.33},
    {Method::GF, 20, 0.20, 0.956, 0.404},
    {Method::GF, 20, 0.30, 0.957, 0.453},
    {Method::GF, 20, 0.40, 0.957, 0.482},
    {Method::GF, 20, 0.50, 0.957, 0.491},
    {Method::GF, 50, 0.01, 0.902, 0.107},
    {Method::GF, 50, 0.03, 0.946, 0.133},
    {Method::GF, 50, 0.05, 0.953, 0.155},
    {Method::GF, 50, 0.10, 0.954, 0.198},
    {Method::GF, 50, 0.20, 0.953, 0.254},
    {Method::GF, 50, 0.30, 0.954, 0.287},
    {Method::GF, 50, 0.40, 0.954, 0.304},
    {Method::GF, 50, 0.50, 0.955, 0.31},
    {Method::GF, 100, 0.01, 0.928, 0.0611},
    {Method::GF, 100, 0.03, 0.951, 0.0843},
    {Method::GF, 100, 0.05, 0.955, 0.102},
    {Method::GF, 100, 0.10, 0.954, 0.136},
    {Method::GF, 100, 0.20, 0.953, 0.175},
    {Method::GF, 100, 0.30, 0.951, 0.197},
    {Method::GF, 100, 0.40, 0.949, 0.209},
    {Method::GF, 100, 0.50, 0.951, 0.214},
    {Method::GF, 200, 0.01, 0.949, 0.0373},
    {Method::GF, 200, 0.03, 0.952, 0.0563},
    {Method::GF, 200, 0.05, 0.95, 0.0699},
    {Method::GF, 200, 0.10, 0.952, 0.0932},
    {Method::GF, 200, 0.20, 0.95, 0.121},
    {Method::GF, 200, 0.30, 0.95, 0.137},
    {Method::GF, 200, 0.40, 0.953, 0.145},
    {Method::GF, 200, 0.50, 0.949, 0.148},
    {Method::GF, 500, 0.01, 0.955, 0.0213},
    {Method::GF, 500, 0.03, 0.954, 0.0341},
    {Method::GF, 500, 0.05, 0.951, 0.0424},
    {Method::GF, 500, 0.10, 0.95, 0.0565},
    {Method::GF, 500, 0.20, 0.953, 0.0742},
    {Method::GF, 500, 0.30, 0.95, 0.0841},
    {Method::GF, 500, 0.40, 0.952, 0.0897},
    {Method::GF, 500, 0.50, 0.953, 0.0916},
    {Method::GF, 1000, 0.01, 0.95, 0.0144},
    {Method::GF, 1000, 0.03, 0.951, 0.0233},
    {Method::GF, 1000, 0.05, 0.951, 0.0291},
    {Method::GF, 1000, 0.10, 0.95, 0.0392},
    {Method::GF, 1000, 0.20, 0.952, 0.0516},
    {Method::GF, 1000, 0.30, 0.949, 0.0588},
    {Method::GF, 1000, 0.40, 0.95, 0.0626},
    {Method::GF, 1000, 0.50, 0.949, 0.0639},
    {Method::ModGF, 1, 0.01, 0.95, 0.798},
    {Method::ModGF, 1, 0.03, 0.95, 0.814},
    {Method::ModGF, 1, 0.05, 0.95, 0.83},
    {Method::ModGF, 1, 0.10, 0.95, 0.87},
    {Method::ModGF, 1, 0.20, 0.95, 0.922},
    {Method::ModGF, 1, 0.30, 0.95, 0.941},
    {Method::ModGF, 1, 0.40, 0.95, 0.948},
    {Method::ModGF, 1, 0.50, 0.95, 0.951},
    {Method::ModGF, 2, 0.01, 0.968, 0.816},
    {Method::ModGF, 2, 0.03, 0.977, 0.83},
    {Method::ModGF, 2, 0.05, 0.98, 0.844},
    {Method::ModGF, 2, 0.10, 0.983, 0.88},
    {Method::ModGF, 2, 0.20, 0.986, 0.935},
    {Method::ModGF, 2, 0.30, 0.986, 0.958},
    {Method::ModGF, 2, 0.40, 0.986, 0.968},
    {Method::ModGF, 2, 0.50, 0.986, 0.971},
    {Method::ModGF, 5, 0.01, 0.955, 0.656},
    {Method::ModGF, 5, 0.03, 0.973, 0.682},
    {Method::ModGF, 5, 0.05, 0.98, 0.706},
    {Method::ModGF, 5, 0.10, 0.986, 0.764},
    {Method::ModGF, 5, 0.20, 0.989, 0.862},
    {Method::ModGF, 5, 0.30, 0.989, 0.91},
    {Method::ModGF, 5, 0.40, 0.989, 0.933},
    {Method::ModGF, 5, 0.50, 0.989, 0.939},
    {Method::ModGF, 10, 0.01, 0.946, 0.426},
    {Method::ModGF, 10, 0.03, 0.973, 0.457},
    {Method::ModGF, 10, 0.05, 0.98, 0.487},
    {Method::ModGF, 10, 0.10, 0.986, 0.562},
    {Method::ModGF, 10, 0.20, 0.986, 0.709},
    {Method::ModGF, 10, 0.30, 0.984, 0.804},
    {Method::ModGF, 10, 0.40, 0.982, 0.85},
    {Method::ModGF, 10, 0.50, 0.981, 0.865},
    {Method::ModGF, 20, 0.01, 0.944, 0.237},
    {Method::ModGF, 20, 0.03, 0.974, 0.268},
    {Method::ModGF, 20, 0.05, 0.98, 0.296},
    {Method::ModGF, 20, 0.10, 0.983, 0.364},
    {Method::ModGF, 20, 0.20, 0.976, 0.499},
    {Method::ModGF, 20, 0.30, 0.974, 0.612},
    {Method::ModGF, 20, 0.40, 0.972, 0.679},
    {Method::ModGF, 20, 0.50, 0.972, 0.702},
    {Method::ModGF, 50, 0.01, 0.953, 0.109},
    {Method::ModGF, 50, 0.03, 0.973, 0.138},
    {Method::ModGF, 50, 0.05, 0.974, 0.163},
    {Method::ModGF, 50, 0.10, 0.972, 0.215},
    {Method::ModGF, 50, 0.20, 0.966, 0.29},
    {Method::ModGF, 50, 0.30, 0.966, 0.342},
    {Method::ModGF, 50, 0.40, 0.963, 0.376},
    {Method::ModGF, 50, 0.50, 0.964, 0.388},
    {Method::ModGF, 100, 0.01, 0.951, 0.062},
    {Method::ModGF, 100, 0.03, 0.965, 0.0866},
    {Method::ModGF, 100, 0.05, 0.966, 0.106},
    {Method::ModGF, 100, 0.10, 0.963, 0.143},
    {Method::ModGF, 100, 0.20, 0.961, 0.188},
    {Method::ModGF, 100, 0.30, 0.959, 0.212},
    {Method::ModGF, 100, 0.40, 0.957, 0.225},
    {Method::ModGF, 100, 0.50, 0.957, 0.229},
    {Method::ModGF, 200, 0.01, 0.959, 0.0377},
    {Method::ModGF, 200, 0.03, 0.959, 0.0574},
    {Method::ModGF, 200, 0.05, 0.956, 0.0715},
    {Method::ModGF, 200, 0.10, 0.957, 0.0956},
    {Method::ModGF, 200, 0.20, 0.955, 0.124},
    {Method::ModGF, 200, 0.30, 0.954, 0.14},
    {Method::ModGF, 200, 0.40, 0.957, 0.149},
    {Method::ModGF, 200, 0.50, 0.954, 0.151},
    {Method::ModGF, 500, 0.01, 0.957, 0.0214},
    {Method::ModGF, 500, 0.03, 0.956, 0.0344},
    {Method::ModGF, 500, 0.05, 0.954, 0.0427},
    {Method::ModGF, 500, 0.10, 0.952, 0.057},
    {Method::ModGF, 500, 0.20, 0.955, 0.0748},
    {Method::ModGF, 500, 0.30, 0.952, 0.0849},
    {Method::ModGF, 500, 0.40, 0.953, 0.0905},
    {Method::ModGF, 500, 0.50, 0.954, 0.0924},
    {Method::ModGF, 1000, 0.01, 0.952, 0.0144},
    {Method::ModGF, 1000, 0.03, 0.952, 0.0233},
    {Method::ModGF, 1000, 0.05, 0.952, 0.0292},
    {Method::ModGF, 1000, 0.10, 0.951, 0.0393},
    {Method::ModGF, 1000, 0.20, 0.953, 0.0518},
    {Method::ModGF, 1000, 0.30, 0.95, 0.059},
    {Method::ModGF, 1000, 0.40, 0.951, 0.0629},
    {Method::ModGF, 1000, 0.50, 0.949, 0.0641},
    {Method::FlatBayes, 1, 0.01, 0.208, 0.921},
    {Method::FlatBayes, 1, 0.03, 0.672, 0.922},
    {Method::FlatBayes, 1, 0.05, 0.909, 0.923},
    {Method::FlatBayes, 1, 0.10, 0.999, 0.924},
    {Method::FlatBayes, 1, 0.20, 1.0, 0.926},
    {Method::FlatBayes, 1, 0.30, 1.0, 0.927},
    {Method::FlatBayes, 1, 0.40, 1.0, 0.928},
    {Method::FlatBayes, 1, 0.50, 1.0, 0.928},
    {Method::FlatBayes, 2, 0.01, 0.347, 0.851},
    {Method::FlatBayes, 2, 0.03, 0.736, 0.858},
    {Method::FlatBayes, 2, 0.05, 0.879, 0.863},
    {Method::FlatBayes, 2, 0.10, 0.975, 0.872},
    {Method::FlatBayes, 2, 0.20, 0.998, 0.885},
    {Method::FlatBayes, 2, 0.30, 1.0, 0.892},
    {Method::FlatBayes, 2, 0.40, 1.0, 0.896},
    {Method::FlatBayes, 2, 0.50, 1.0, 0.897},
    {Method::FlatBayes, 5, 0.01, 0.552, 0.627},
    {Method::FlatBayes, 5, 0.03, 0.817, 0.644},
    {Method::FlatBayes, 5, 0.05, 0.894, 0.659},
    {Method::FlatBayes, 5, 0.10, 0.952, 0.691},
    {Method::FlatBayes, 5, 0.20, 0.981, 0.738},
    {Method::FlatBayes, 5, 0.30, 0.989, 0.77},
    {Method::FlatBayes, 5, 0.40, 0.991, 0.788},
    {Method::FlatBayes, 5, 0.50, 0.992, 0.794},
    {Method::FlatBayes, 10, 0.01, 0.694, 0.408},
    {Method::FlatBayes, 10, 0.03, 0.873, 0.432},
    {Method::FlatBayes, 10, 0.05, 0.915, 0.454},
    {Method::FlatBayes, 10, 0.10, 0.954, 0.5},
    {Method::FlatBayes, 10, 0.20, 0.971, 0.572},
    {Method::FlatBayes, 10, 0.30, 0.975, 0.621},
    {Method::FlatBayes, 10, 0.40, 0.976, 0.65},
    {Method::FlatBayes, 10, 0.50, 0.976, 0.659},
    {Method::FlatBayes, 20, 0.01, 0.813, 0.233},
    {Method::FlatBayes, 20, 0.03, 0.915, 0.26},
    {Method::FlatBayes, 20, 0.05, 0.94, 0.284},
    {Method::FlatBayes, 20, 0.10, 0.959, 0.336},
    {Method::FlatBayes, 20, 0.20, 0.961, 0.412},
    {Method::FlatBayes, 20, 0.30, 0.96, 0.463},
    {Method::FlatBayes, 20, 0.40, 0.962, 0.492},
    {Method::FlatBayes, 20, 0.50, 0.961, 0.502},
    {Method::FlatBayes, 50, 0.01, 0.904, 0.108},
    {Method::FlatBayes, 50, 0.03, 0.947, 0.134},
    {Method::FlatBayes, 50, 0.05, 0.954, 0.156},
    {Method::FlatBayes, 50, 0.10, 0.956, 0.2},
    {Method::FlatBayes, 50, 0.20, 0.955, 0.257},
    {Method::FlatBayes, 50, 0.30, 0.956, 0.289},
    {Method::FlatBayes, 50, 0.40, 0.956, 0.307},
    {Method::FlatBayes, 50, 0.50, 0.956, 0.313},
    {Method::FlatBayes, 100, 0.01, 0.929, 0.0613},
    {Method::FlatBayes, 100, 0.03, 0.952, 0.0846},
    {Method::FlatBayes, 100, 0.05, 0.955, 0.103},
    {Method::FlatBayes, 100, 0.10, 0.955, 0.136},
    {Method::FlatBayes, 100, 0.20, 0.954, 0.176},
    {Method::FlatBayes, 100, 0.30, 0.952, 0.198},
    {Method::FlatBayes, 100, 0.40, 0.95, 0.21},
    {Method::FlatBayes, 100, 0.50, 0.951, 0.215},
    {Method::FlatBayes, 200, 0.01, 0.95, 0.0374},
    {Method::FlatBayes, 200, 0.03, 0.953, 0.0564},
    {Method::FlatBayes, 200, 0.05, 0.951, 0.0701},
    {Method::FlatBayes, 200, 0.10, 0.952, 0.0934},
    {Method::FlatBayes, 200, 0.20, 0.951, 0.121},
    {Method::FlatBayes, 200, 0.30, 0.951, 0.137},
    {Method::FlatBayes, 200, 0.40, 0.953, 0.145},
    {Method::FlatBayes, 200, 0.50, 0.95, 0.148},
    {Method::FlatBayes, 500, 0.01, 0.955, 0.0213},
    {Method::FlatBayes, 500, 0.03, 0.954, 0.0342},
    {Method::FlatBayes, 500, 0.05, 0.951, 0.0424},
    {Method::FlatBayes, 500, 0.10, 0.95, 0.0566},
    {Method::FlatBayes, 500, 0.20, 0.953, 0.0742},
    {Method::FlatBayes, 500, 0.30, 0.951, 0.0842},
    {Method::FlatBayes, 500, 0.40, 0.952, 0.0898},
    {Method::FlatBayes, 500, 0.50, 0.953, 0.0917},
    {Method::FlatBayes, 1000, 0.01, 0.95, 0.0144},
    {Method::FlatBayes, 1000, 0.03, 0.951, 0.0233},
    {Method::FlatBayes, 1000, 0.05, 0.951, 0.0291},
    {Method::FlatBayes, 1000, 0.10, 0.95, 0.0392},
    {Method::FlatBayes, 1000, 0.20, 0.953, 0.0516},
    {Method::FlatBayes, 1000, 0.30, 0.949, 0.0588},
    {Method::FlatBayes, 1000, 0.40, 0.95, 0.0626},
    {Method::FlatBayes, 1000, 0.50, 0.949, 0.0639},
    {Method::JeffreysBayes, 1, 0.01, 0.961, 0.98},
    {Method::JeffreysBayes, 1, 0.03, 0.994, 0.983},
    {Method::JeffreysBayes, 1, 0.05, 0.998, 0.985},
    {Method::JeffreysBayes, 1, 0.10, 0.999, 0.988},
    {Method::JeffreysBayes, 1, 0.20, 1.0, 0.99},
    {Method::JeffreysBayes, 1, 0.30, 1.0, 0.991},
    {Method::JeffreysBayes, 1, 0.40, 1.0, 0.991},
    {Method::JeffreysBayes, 1, 0.50, 1.0, 0.991},
    {Method::JeffreysBayes, 2, 0.01, 0.939, 0.89},
    {Method::JeffreysBayes, 2, 0.03, 0.981, 0.904},
    {Method::JeffreysBayes, 2, 0.05, 0.989, 0.915},
    {Method::JeffreysBayes, 2, 0.10, 0.995, 0.935},
    {Method::JeffreysBayes, 2, 0.20, 0.998, 0.958},
    {Method::JeffreysBayes, 2, 0.30, 0.998, 0.969},
    {Method::JeffreysBayes, 2, 0.40, 0.999, 0.974},
    {Method::JeffreysBayes, 2, 0.50, 0.998, 0.976},
    {Method::JeffreysBayes, 5, 0.01, 0.942, 0.606},
    {Method::JeffreysBayes, 5, 0.03, 0.971, 0.634},
    {Method::JeffreysBayes, 5, 0.05, 0.979, 0.658},
    {Method::JeffreysBayes, 5, 0.10, 0.984, 0.71},
    {Method::JeffreysBayes, 5, 0.20, 0.985, 0.788},
    {Method::JeffreysBayes, 5, 0.30, 0.984, 0.843},
    {Method::JeffreysBayes, 5, 0.40, 0.983, 0.877},
    {Method::JeffreysBayes, 5, 0.50, 0.983, 0.888},
    {Method::JeffreysBayes, 10, 0.01, 0.96, 0.365},
    {Method::JeffreysBayes, 10, 0.03, 0.977, 0.398},
    {Method::JeffreysBayes, 10, 0.05, 0.981, 0.427},
    {Method::JeffreysBayes, 10, 0.10, 0.98, 0.492},
    {Method::JeffreysBayes, 10, 0.20, 0.972, 0.598},
    {Method::JeffreysBayes, 10, 0.30, 0.966, 0.675},
    {Method::JeffreysBayes, 10, 0.40, 0.963, 0.721},
    {Method::JeffreysBayes, 10, 0.50, 0.961, 0.737},
    {Method::JeffreysBayes, 20, 0.01, 0.971, 0.199},
    {Method::JeffreysBayes, 20, 0.03, 0.979, 0.232},
    {Method::JeffreysBayes, 20, 0.05, 0.978, 0.262},
    {Method::JeffreysBayes, 20, 0.10, 0.97, 0.326},
    {Method::JeffreysBayes, 20, 0.20, 0.959, 0.427},
    {Method::JeffreysBayes, 20, 0.30, 0.954, 0.491},
    {Method::JeffreysBayes, 20, 0.40, 0.952, 0.528},
    {Method::JeffreysBayes, 20, 0.50, 0.951, 0.54},
    {Method::JeffreysBayes, 50, 0.01, 0.979, 0.0924},
    {Method::JeffreysBayes, 50, 0.03, 0.973, 0.123},
    {Method::JeffreysBayes, 50, 0.05, 0.965, 0.15},
    {Method::JeffreysBayes, 50, 0.10, 0.955, 0.203},
    {Method::JeffreysBayes, 50, 0.20, 0.952, 0.264},
    {Method::JeffreysBayes, 50, 0.30, 0.953, 0.297},
    {Method::JeffreysBayes, 50, 0.40, 0.952, 0.314},
    {Method::JeffreysBayes, 50, 0.50, 0.953, 0.319},
    {Method::JeffreysBayes, 100, 0.01, 0.979, 0.0544},
    {Method::JeffreysBayes, 100, 0.03, 0.964, 0.0818},
    {Method::JeffreysBayes, 100, 0.05, 0.956, 0.103},
    {Method::JeffreysBayes, 100, 0.10, 0.952, 0.139},
    {Method::JeffreysBayes, 100, 0.20, 0.952, 0.178},
    {Method::JeffreysBayes, 100, 0.30, 0.95, 0.2},
    {Method::JeffreysBayes, 100, 0.40, 0.949, 0.212},
    {Method::JeffreysBayes, 100, 0.50, 0.95, 0.216},
    {Method::JeffreysBayes, 200, 0.01, 0.971, 0.0348},
    {Method::JeffreysBayes, 200, 0.03, 0.951, 0.0569},
    {Method::JeffreysBayes, 200, 0.05, 0.946, 0.0713},
    {Method::JeffreysBayes, 200, 0.10, 0.951, 0.0943},
    {Method::JeffreysBayes, 200, 0.20, 0.95, 0.121},
    {Method::JeffreysBayes, 200, 0.30, 0.95, 0.138},
    {Method::JeffreysBayes, 200, 0.40, 0.953, 0.146},
    {Method::JeffreysBayes, 200, 0.50, 0.949, 0.148},
    {Method::JeffreysBayes, 500, 0.01, 0.956, 0.0212},
    {Method::JeffreysBayes, 500, 0.03, 0.951, 0.0346},
    {Method::JeffreysBayes, 500, 0.05, 0.95, 0.0427},
    {Method::JeffreysBayes, 500, 0.10, 0.951, 0.0567},
    {Method::JeffreysBayes, 500, 0.20, 0.954, 0.0743},
    {Method::JeffreysBayes, 500, 0.30, 0.95, 0.0843},
    {Method::JeffreysBayes, 500, 0.40, 0.952, 0.0899},
    {Method::JeffreysBayes, 500, 0.50, 0.953, 0.0918},
    {Method::JeffreysBayes, 1000, 0.01, 0.948, 0.0146},
    {Method::JeffreysBayes, 1000, 0.03, 0.95, 0.0233},
    {Method::JeffreysBayes, 1000, 0.05, 0.951, 0.0291},
    {Method::JeffreysBayes, 1000, 0.10, 0.95, 0.0392},
    {Method::JeffreysBayes, 1000, 0.20, 0.951, 0.0517},
    {Method::JeffreysBayes, 1000, 0.30, 0.95, 0.0588},
    {Method::JeffreysBayes, 1000, 0.40, 0.95, 0.0627},
    {Method::JeffreysBayes, 1000, 0.50, 0.949, 0.0639},
}};

inline std::optional<ReferenceCell> reference_lookup(Method method, int n, double theta) {
    for (const auto& cell : kReferenceTable)
        if (cell.method == method && cell.n == n &&
            cell.theta > theta - 1e-9 && cell.theta < theta + 1e-9)
            return cell;
    return std::nullopt;
}

}  // namespace gfi::sim
