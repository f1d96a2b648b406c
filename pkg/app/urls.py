"""paclab URL Configuration

Every app exposes its API under api/<app>/; tokens are issued at api/token/.
"""
from django.contrib import admin
from django.urls import path, include
from rest_framework.authtoken.views import obtain_auth_token

urlpatterns = [
    path('admin/', admin.site.urls),
    path('api/token/', obtain_auth_token, name='token'),
    path('api/codec/', include('codec.urls')),
    path('api/construct/', include('construct.urls')),
    path('api/decoders/', include('decoders.urls')),
    path('api/sim/', include('sim.urls')),
]
