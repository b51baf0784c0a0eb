#pragma once

#include "hopfpi/errors.hpp"
#include "hopfpi/field.hpp"
#include "hopfpi/matrix.hpp"
#include "hopfpi/group.hpp"
#include "hopfpi/report.hpp"
#include "hopfpi/structures.hpp"
#include "hopfpi/subobjects.hpp"
#include "hopfpi/induction.hpp"
#include "hopfpi/coinduction.hpp"
#include "hopfpi/catalog.hpp"

namespace hopfpi {

inline constexpr const char* version = "1.0.0";

}  // namespace hopfpi
