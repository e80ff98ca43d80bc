#pragma once

#include <string>

#include "gfi/errors.hpp"

namespace gfi::sim {

/// Interval methods compared by the coverage study.
enum class Method { GF, ModGF, FlatBayes, JeffreysBayes };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::GF: return "GF";
        case Method::ModGF: return "ModGF";
        case Method::FlatBayes: return "FlatBayes";
        case Method::JeffreysBayes: return "JeffreysBayes";
    }
    return "?";
}

inline Method parse_method(const std::string& name) {
    if (name == "GF") return Method::GF;
    if (name == "ModGF") return Method::ModGF;
    if (name == "FlatBayes") return Method::FlatBayes;
    if (name == "JeffreysBayes") return Method::JeffreysBayes;
    throw ConfigError("unknown method: " + name);
}

}  // namespace gfi::sim
