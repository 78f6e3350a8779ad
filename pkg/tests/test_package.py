def test_import_star():
    """
    Test that `from schreier.spaces import *` imports all the modules
    """
    mod_src = 'from schreier.spaces import *\n'
    code = compile(mod_src, 'test_import_star_module.py', 'exec')
    ns = {}
    exec(code, ns)
    assert 'families' in ns
    assert 'norms' in ns
    assert 'tingley' in ns
