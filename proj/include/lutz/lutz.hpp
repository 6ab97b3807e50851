// Umbrella header.

#pragma once

#include "lutz/exact_linalg.hpp"
#include "lutz/io.hpp"
#include "lutz/legendrian.hpp"
#include "lutz/openbook.hpp"
#include "lutz/surgery.hpp"
#include "lutz/verify.hpp"
