#pragma once

#include "shortrange/boundary.hpp"
#include "shortrange/errors.hpp"
#include "shortrange/poles.hpp"
#include "shortrange/polyroots.hpp"
#include "shortrange/scattering.hpp"
#include "shortrange/specfun.hpp"
