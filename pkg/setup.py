from setuptools import setup

setup(
    author="Utrecht University Yoda team",
    author_email="yoda@uu.nl",
    description=('Tools for finding, counting and drawing rectangular layouts under orientation constraints'),
    install_requires=[
        'networkx>=2.6',
        'humanize>=0.5',
        'iteration_utilities==0.11.0',
        'PyYaml'
    ],
    name='rlayouttools',
    packages=['rlayouttools'],
    entry_points={
        'console_scripts': [
            'rlayout=rlayouttools.cli:entry',
            'rlvalidate=rlayouttools.validatelayout:entry',
            'rlexists=rlayouttools.layoutexists:entry',
            'rlcount=rlayouttools.countlayouts:entry',
            'rlenumerate=rlayouttools.enumeratelayouts:entry',
            'rldecompose=rlayouttools.decomposegraph:entry',
            'rlareauniversal=rlayouttools.areauniversal:entry',
            'rlrender=rlayouttools.renderlayout:entry'
        ]
    },
    version='2.0.0'
)
