// skh - finite skew lattice and skew Heyting algebra workbench

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
