#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace paralie {

/// Basic classes that survive in dimension 3, plus the integrable class F0.
enum class ClassId { F0, F1, F4, F5, F8, F9, F10, F11 };

/// The seven non-trivial classes in table order.
inline constexpr std::array<ClassId, 7> kBasicClasses{
    ClassId::F1, ClassId::F4, ClassId::F5, ClassId::F8,
    ClassId::F9, ClassId::F10, ClassId::F11};

std::string_view to_string(ClassId id);

/// Case-insensitive: "F8", "f8" and "8" all parse.
std::optional<ClassId> parse_class_id(std::string_view text);

/// True for F1 and F11, whose families carry a second parameter beta.
constexpr bool has_beta(ClassId id) { return id == ClassId::F1 || id == ClassId::F11; }

struct ClassParams {
    ClassId id = ClassId::F0;
    double alpha = 0.0;
    double beta = 0.0;  // only meaningful for F1 and F11

    friend bool operator==(const ClassParams&, const ClassParams&) = default;
};

/// Throws std::invalid_argument for F0 with non-zero parameters or for
/// non-finite parameters.
void validate(const ClassParams& p);

}  // namespace paralie
