#pragma once

#include "paralie/classes.hpp"
#include "paralie/errors.hpp"
#include "paralie/expengine.hpp"
#include "paralie/levicivita.hpp"
#include "paralie/lie.hpp"
#include "paralie/mat3.hpp"
#include "paralie/structure.hpp"
#include "paralie/tensor3.hpp"
