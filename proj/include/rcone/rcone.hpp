#pragma once

#include "rcone/criterion.hpp"
#include "rcone/curve.hpp"
#include "rcone/dim_value.hpp"
#include "rcone/json_io.hpp"
#include "rcone/search.hpp"
#include "rcone/surface.hpp"
