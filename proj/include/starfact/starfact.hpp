#pragma once

#include "starfact/arrays.hpp"
#include "starfact/base_factor.hpp"
#include "starfact/construct.hpp"
#include "starfact/core.hpp"
#include "starfact/direct.hpp"
#include "starfact/lifting.hpp"
#include "starfact/oracle.hpp"
#include "starfact/serialize.hpp"
#include "starfact/verifier.hpp"
