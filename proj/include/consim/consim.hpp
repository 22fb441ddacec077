#pragma once

// Umbrella header.

#include "consim/automorphism.hpp"
#include "consim/canonical.hpp"
#include "consim/equations.hpp"
#include "consim/format.hpp"
#include "consim/realify.hpp"
