#include "paralie/classes.hpp"
#include "paralie/tensor3.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace paralie {

double Tensor3::max_abs() const {
    double m = 0.0;
    for (double x : t_) m = std::max(m, std::abs(x));
    return m;
}

bool Tensor3::all_finite() const {
    return std::all_of(t_.begin(), t_.end(), [](double x) { return std::isfinite(x); });
}

std::string_view to_string(ClassId id) {
    switch (id) {
        case ClassId::F0: return "F0";
        case ClassId::F1: return "F1";
        case ClassId::F4: return "F4";
        case ClassId::F5: return "F5";
        case ClassId::F8: return "F8";
        case ClassId::F9: return "F9";
        case ClassId::F10: return "F10";
        case ClassId::F11: return "F11";
    }
    return "?";
}

std::optional<ClassId> parse_class_id(std::string_view text) {
    if (!text.empty() && (text.front() == 'F' || text.front() == 'f')) text.remove_prefix(1);
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](unsigned char c) { return std::isdigit(c); })) {
        return std::nullopt;
    }
    if (text == "0") return ClassId::F0;
    for (ClassId id : kBasicClasses) {
        if (to_string(id).substr(1) == text) return id;
    }
    return std::nullopt;
}

void validate(const ClassParams& p) {
    if (!std::isfinite(p.alpha) || !std::isfinite(p.beta)) {
        throw std::invalid_argument("class parameters must be finite");
    }
    if (p.id == ClassId::F0 && (p.alpha != 0.0 || p.beta != 0.0)) {
        throw std::invalid_argument("class F0 requires alpha = beta = 0");
    }
}

}  // namespace paralie
