#pragma once

#include <hexstrip/big_count.hpp>
#include <hexstrip/bivar_poly.hpp>
#include <hexstrip/counting.hpp>
#include <hexstrip/enumerator.hpp>
#include <hexstrip/errors.hpp>
#include <hexstrip/identities.hpp>
#include <hexstrip/sequences.hpp>
#include <hexstrip/strip.hpp>
#include <hexstrip/triangle.hpp>
