#!/usr/bin/env python3
"""Test script to verify the modular setup works correctly"""


def test_imports():
    """Test that all our modules can be imported"""
    print("🧪 Testing module imports...")

    from config.constants import DEFAULT_NODE_BUDGET, OUTPUT_MODES
    print("✅ config.constants imported successfully")
    assert DEFAULT_NODE_BUDGET > 0 and "json" in OUTPUT_MODES

    from core.hamming import rank
    from core.bounds import bounds_report
    print("✅ core.hamming and core.bounds imported successfully")

    from systems.finite_field import make_field
    from systems.density import is_metrically_dense
    print("✅ systems.finite_field and systems.density imported successfully")

    from ui.cli import cli, run
    print("✅ ui.cli imported successfully")

    print("\n🎉 All modules imported successfully!")


def test_field_construction():
    """Test building a small extension field"""
    print("\n🧮 Testing field construction...")

    from systems.finite_field import make_field

    gf8 = make_field(8)
    print(f"✅ Built {gf8}")
    assert (gf8.p, gf8.e) == (2, 3)


def test_density_pipeline():
    """Test the span -> bounds -> verdict pipeline end to end"""
    print("\n🔍 Testing density pipeline...")

    from entities.reports import SearchConfig, Verdict
    from systems.density import is_metrically_dense
    from systems.finite_field import make_field, random_subspace, span

    points = span(random_subspace(4, 2, make_field(3), seed=0))
    print(f"✅ Generated subspace with {points.m} points")

    verdict = is_metrically_dense(points, SearchConfig(q=3, node_budget=1000))
    print(f"✅ Verdict: {verdict.verdict.value} ({verdict.certified_by.value})")
    assert verdict.verdict is Verdict.DENSE


def main():
    """Run all tests"""
    print("🚀 Hamrank - Modular Setup Test")
    print("=" * 50)

    tests = [test_imports, test_field_construction, test_density_pipeline]
    tests_passed = 0
    for test in tests:
        try:
            test()
            tests_passed += 1
        except Exception as e:
            print(f"❌ {test.__name__} failed: {e}")

    print("\n" + "=" * 50)
    print(f"📊 Test Results: {tests_passed}/{len(tests)} tests passed")

    if tests_passed == len(tests):
        print("🎉 All systems working!")
        print("\nNext steps:")
        print("1. Run: python main.py --help")
        print("2. Run the full suite: pytest")
    else:
        print("⚠️ Some tests failed. Check the error messages above.")


if __name__ == "__main__":
    main()
